#pragma once

// Coordinates on the normalizer of a cyclic semiregular group of prime order.
//
// Let pi be a fixed-point-free element of order p on mp points with cycles
// pi_1, ..., pi_m (the blocks). With gamma_i the smallest point of block i,
// every point is pi^k(gamma_i) =: (i, k). A triple (a, u^r, alpha) with
// a in F_p^m, u the smallest primitive root mod p and alpha in S_m acts by
//
//     (a, u^r, alpha) : (i, k) -> (alpha(i), k u^r + a_alpha(i)).
//
// That action is the ground truth; everything else here is derived from it
// under right-factor-first composition. alpha acts on vectors by moving
// coordinates, (alpha b)_j = b_{alpha^-1(j)}, and the product is
//
//     (a, u^r, alpha)(b, u^s, beta) = (a + u^r alpha(b), u^(r+s), alpha beta).
//
// The scalar on alpha(b) is u^r (from the left factor); a display with u^s
// instead does not match the action and the power formula.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/modular.hpp"
#include "hgs/perm.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

/// F_p^x with its chosen generator u (smallest primitive root).
class UnitGroup {
 public:
  UnitGroup() = default;
  explicit UnitGroup(int p) : p_(p), u_(smallest_primitive_root(p)) {
    pow_.resize(p - 1);
    dlog_.assign(p, -1);
    long x = 1;
    for (int k = 0; k < p - 1; ++k) {
      pow_[k] = static_cast<int>(x);
      dlog_[x] = k;
      x = x * u_ % p;
    }
  }

  int p() const { return p_; }
  int u() const { return u_; }
  int order() const { return p_ - 1; }
  /// u^r for any integer r.
  int pow(long r) const { return pow_[mod(r, p_ - 1)]; }
  /// r with u^r = x (x a nonzero residue).
  int log(int x) const { return dlog_[mod(x, p_)]; }
  int add(int a, int b) const { return (a + b) % p_; }
  int mul(int a, int b) const { return static_cast<int>(static_cast<long>(a) * b % p_); }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int inv(int a) const { return pow(-log(a)); }

 private:
  int p_ = 0;
  int u_ = 1;
  std::vector<int> pow_;
  std::vector<int> dlog_;
};

struct Triple {
  std::vector<int> a;  // residues mod p
  int r = 0;           // exponent of u, mod p - 1
  Perm alpha;          // permutation of the m blocks (0-based)

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// (alpha b)_j = b_{alpha^-1(j)}.
inline std::vector<int> shift(const Perm& alpha, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[alpha(static_cast<Point>(i))] = b[i];
  return out;
}

/// Group law on triples for fixed (p, m).
class TripleAlgebra {
 public:
  TripleAlgebra(int p, int m) : units_(p), m_(m) {
    if (m < 1) throw PreconditionError("TripleAlgebra: m must be positive");
  }

  int p() const { return units_.p(); }
  int m() const { return m_; }
  const UnitGroup& units() const { return units_; }

  Triple identity() const { return {std::vector<int>(m_, 0), 0, Perm(m_)}; }
  /// ([1, ..., 1], u^0, I), the generator pi itself.
  Triple pi() const { return {std::vector<int>(m_, 1 % p()), 0, Perm(m_)}; }

  Triple normalize(Triple t) const {
    for (auto& x : t.a) x = static_cast<int>(mod(x, p()));
    t.r = static_cast<int>(mod(t.r, p() - 1));
    return t;
  }

  void check(const Triple& t) const {
    if (static_cast<int>(t.a.size()) != m_ || static_cast<int>(t.alpha.degree()) != m_)
      throw Error("triple: parameter mismatch");
  }

  Triple mul(const Triple& s, const Triple& t) const {
    check(s);
    check(t);
    const int ur = units_.pow(s.r);
    const auto moved = shift(s.alpha, t.a);
    Triple out{std::vector<int>(m_), static_cast<int>(mod(s.r + t.r, p() - 1)), s.alpha * t.alpha};
    for (int j = 0; j < m_; ++j) out.a[j] = units_.add(s.a[j], units_.mul(ur, moved[j]));
    return out;
  }

  /// The product as literally displayed with u^s scaling alpha(b); kept to
  /// document where it departs from the action-consistent law.
  Triple mul_as_displayed(const Triple& s, const Triple& t) const {
    const int us = units_.pow(t.r);
    const auto moved = shift(s.alpha, t.a);
    Triple out{std::vector<int>(m_), static_cast<int>(mod(s.r + t.r, p() - 1)), s.alpha * t.alpha};
    for (int j = 0; j < m_; ++j) out.a[j] = units_.add(s.a[j], units_.mul(us, moved[j]));
    return out;
  }

  /// (a, u^r, alpha)^-1 = (-u^-r alpha^-1(a), u^-r, alpha^-1).
  Triple inverse(const Triple& t) const {
    const Perm ai = t.alpha.inverse();
    const int c = units_.neg(units_.pow(-t.r));
    Triple out{shift(ai, t.a), static_cast<int>(mod(-t.r, p() - 1)), ai};
    for (auto& x : out.a) x = units_.mul(c, x);
    return out;
  }

  /// n-fold product by repeated multiplication.
  Triple pow_iterated(const Triple& t, long n) const {
    Triple out = identity();
    for (long i = 0; i < n; ++i) out = mul(out, t);
    return out;
  }

  /// (sum_{k<n} u^{rk} alpha^k(a), u^{rn}, alpha^n).
  Triple pow(const Triple& t, long n) const {
    if (n < 0) throw Error("triple pow: negative exponent");
    std::vector<int> sum(m_, 0);
    std::vector<int> term = t.a;  // alpha^k(a)
    for (long k = 0; k < n; ++k) {
      const int c = units_.pow(static_cast<long>(t.r) * k);
      for (int j = 0; j < m_; ++j) sum[j] = units_.add(sum[j], units_.mul(c, term[j]));
      term = shift(t.alpha, term);
    }
    return {sum, static_cast<int>(mod(static_cast<long>(t.r) * n, p() - 1)), t.alpha.pow(n)};
  }

  /// g t g^-1 by definition.
  Triple conj(const Triple& g, const Triple& t) const { return mul(mul(g, t), inverse(g)); }

  /// For g = (b, u^s, beta), t = (a, u^r, alpha):
  /// g t g^-1 = (b + u^s beta(a) - u^r (beta alpha beta^-1)(b), u^r, beta alpha beta^-1).
  Triple conj_closed_form(const Triple& g, const Triple& t) const {
    const Perm c = g.alpha * t.alpha * g.alpha.inverse();
    const int us = units_.pow(g.r), ur = units_.pow(t.r);
    const auto ba = shift(g.alpha, t.a);
    const auto cb = shift(c, g.a);
    Triple out{std::vector<int>(m_), t.r, c};
    for (int j = 0; j < m_; ++j)
      out.a[j] = units_.add(units_.add(g.a[j], units_.mul(us, ba[j])), units_.neg(units_.mul(ur, cb[j])));
    return out;
  }

  /// p^m (p - 1) m!, the order of the normalizer.
  static std::int64_t norm_order(int p, int m) {
    std::int64_t n = p - 1;
    for (int i = 0; i < m; ++i) n *= p;
    for (int i = 2; i <= m; ++i) n *= i;
    return n;
  }

  /// Visits all p^m (p-1) m! triples.
  void for_each(const std::function<void(const Triple&)>& visit) const {
    std::vector<Point> alpha(m_);
    std::iota(alpha.begin(), alpha.end(), Point{0});
    do {
      const Perm al(alpha);
      for (int r = 0; r < p() - 1; ++r) {
        std::vector<int> a(m_, 0);
        while (true) {
          visit(Triple{a, r, al});
          int j = 0;
          while (j < m_ && ++a[j] == p()) a[j++] = 0;
          if (j == m_) break;
        }
      }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }

  /// "([a1,...,am], u^r, alpha)" with alpha in 1-based cycle notation.
  std::string to_string(const Triple& t) const {
    std::string s = "([";
    for (int j = 0; j < m_; ++j) s += (j ? "," : "") + std::to_string(t.a[j]);
    return s + "], u^" + std::to_string(t.r) + ", " + t.alpha.to_string() + ")";
  }

 private:
  UnitGroup units_;
  int m_;
};

/// Blocks of pi = pi_1 ... pi_m and the coordinates (i, k) of every point.
class BlockSystem {
 public:
  /// From an explicit generator: pi must be a product of m disjoint p-cycles
  /// covering all points.
  static BlockSystem from_generator(const Perm& pi, int p) {
    if (!is_prime(p)) throw PreconditionError("block system: p is not prime");
    const std::size_t n = pi.degree();
    if (n == 0 || n % p != 0) throw PreconditionError("block system: degree is not a multiple of p");
    const auto d = cycle_decompose(pi);
    if (!d.fixed_points.empty() || d.cycles.size() != n / p)
      throw PreconditionError("block system: generator is not fixed-point-free of order p");
    for (const auto& c : d.cycles)
      if (static_cast<int>(c.size()) != p) throw PreconditionError("block system: cycle length differs from p");

    BlockSystem b;
    b.p_ = p;
    b.m_ = static_cast<int>(n / p);
    b.pi_ = pi;
    b.coords_.resize(n);
    b.points_.assign(static_cast<std::size_t>(b.m_) * p, 0);
    for (int i = 0; i < b.m_; ++i) {
      const auto& c = d.cycles[i];  // starts at its smallest point; ordered by it
      b.gamma_.push_back(c.front());
      for (int k = 0; k < p; ++k) {
        b.coords_[c[k]] = {i, k};
        b.points_[static_cast<std::size_t>(i) * p + k] = c[k];
      }
      b.factors_.push_back(Perm::from_cycles(n, {c}));
    }
    return b;
  }

  /// Blocks of the unique subgroup of order p of a regular group of order mp.
  /// The generator is the one sending point 0 to the smallest possible point.
  static BlockSystem build(const PermGroup& lambda_gamma, int p) {
    if (!is_regular(lambda_gamma)) throw PreconditionError("block system: group is not regular");
    const auto n = static_cast<int>(lambda_gamma.degree());
    if (n % p != 0 || (n / p) % p == 0) throw PreconditionError("block system: need gcd(p, m) = 1");
    std::vector<Perm> order_p;
    for (const auto& f : lambda_gamma.elements())
      if (!f.is_identity() && f.pow(p).is_identity()) order_p.push_back(f);
    if (static_cast<int>(order_p.size()) != p - 1)
      throw PreconditionError("block system: the p-Sylow subgroup is not unique of order p");
    const Perm* best = &order_p.front();
    for (const auto& f : order_p)
      if (f(0) < (*best)(0)) best = &f;
    return from_generator(*best, p);
  }

  int p() const { return p_; }
  int m() const { return m_; }
  std::size_t degree() const { return pi_.degree(); }
  const Perm& pi() const { return pi_; }
  const std::vector<Point>& gamma() const { return gamma_; }
  const std::vector<Perm>& pi_factors() const { return factors_; }
  int block_of(Point x) const { return coords_[x].first; }
  int exponent_of(Point x) const { return coords_[x].second; }
  Point point(int block, int k) const { return points_[static_cast<std::size_t>(block) * p_ + mod(k, p_)]; }

  Perm to_perm(const Triple& t, const TripleAlgebra& alg) const {
    std::vector<Point> img(degree());
    const int ur = alg.units().pow(t.r);
    for (int i = 0; i < m_; ++i) {
      const int j = t.alpha(static_cast<Point>(i));
      for (int k = 0; k < p_; ++k)
        img[point(i, k)] = point(j, (k * ur + t.a[j]) % p_);
    }
    return Perm(std::move(img));
  }

  /// The triple of f when f normalizes <pi>; nullopt otherwise.
  std::optional<Triple> to_triple(const Perm& f, const TripleAlgebra& alg) const {
    if (f.degree() != degree()) return std::nullopt;
    Triple t{std::vector<int>(m_), 0, Perm()};
    std::vector<Point> alpha(m_);
    for (int i = 0; i < m_; ++i) {
      const Point y = f(gamma_[i]);
      alpha[i] = static_cast<Point>(block_of(y));
      t.a[alpha[i]] = exponent_of(y);
    }
    try {
      t.alpha = Perm(alpha);
    } catch (const Error&) {
      return std::nullopt;
    }
    // f(pi(gamma_0)) = (alpha(0), u^r + a_alpha(0)) fixes r.
    const Point y = f(point(0, 1 % p_));
    if (block_of(y) != alpha[0]) return std::nullopt;
    const int scale = static_cast<int>(mod(exponent_of(y) - t.a[alpha[0]], p_));
    if (scale == 0) return std::nullopt;
    t.r = alg.units().log(scale);
    if (to_perm(t, alg) != f) return std::nullopt;
    return t;
  }

  /// Normalizer membership.
  bool in_norm(const Perm& f, const TripleAlgebra& alg) const { return to_triple(f, alg).has_value(); }
  /// Centralizer membership: r = 0.
  bool in_cent(const Perm& f, const TripleAlgebra& alg) const {
    const auto t = to_triple(f, alg);
    return t && t->r == 0;
  }
  /// Membership in V = <pi_1, ..., pi_m>: r = 0 and alpha = I.
  bool in_v(const Perm& f, const TripleAlgebra& alg) const {
    const auto t = to_triple(f, alg);
    return t && t->r == 0 && t->alpha.is_identity();
  }

  /// pi_i | f: f maps block i onto itself and acts there as pi_i^c, c != 0.
  bool divides(int i, const Perm& f) const {
    const Point g0 = gamma_[i];
    const Point y = f(g0);
    if (block_of(y) != i) return false;
    const int c = exponent_of(y);
    if (c == 0) return false;
    for (int k = 0; k < p_; ++k)
      if (f(point(i, k)) != point(i, k + c)) return false;
    return true;
  }

 private:
  int p_ = 0;
  int m_ = 0;
  Perm pi_;
  std::vector<Point> gamma_;
  std::vector<Perm> factors_;
  std::vector<std::pair<int, int>> coords_;
  std::vector<Point> points_;
};

}  // namespace hgs
