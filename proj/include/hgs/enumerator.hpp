#pragma once

// Regular subgroups N of Perm(Gamma) normalized by lambda(Gamma), for |Gamma| = mp
// with a unique p-Sylow subgroup. Two routes: a brute-force oracle that makes
// no use of Norm(P), and a structured search in triple coordinates.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/forcing.hpp"
#include "hgs/fp_linalg.hpp"
#include "hgs/group_table.hpp"
#include "hgs/groups.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/parallel.hpp"
#include "hgs/perm.hpp"
#include "hgs/perm_group.hpp"
#include "hgs/wreath.hpp"

namespace hgs {

inline constexpr int kOracleExhaustiveCap = 10;
inline constexpr int kOracleConstraintCap = 21;
inline constexpr int kStructuredCap = 42;

struct RegularSubgroupRecord {
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted; the canonical form
  int order = 0;
  std::string iso_class;
  std::optional<Triple> p_part;  // generator of P(N) with a_1 = 1
  bool inside_norm = false;

  friend bool operator<(const RegularSubgroupRecord& x, const RegularSubgroupRecord& y) {
    return std::tie(x.iso_class, x.elements) < std::tie(y.iso_class, y.elements);
  }
};

/// Everything derived from lambda(Gamma) and p.
struct Setting {
  PermGroup lambda;
  int p = 0;
  int m = 0;
  BlockSystem blocks;
  TripleAlgebra alg{2, 1};
  std::vector<GammaEntry> mp_catalog;
  std::string gamma_label;

  std::size_t degree() const { return lambda.degree(); }

  static Setting make(const PermGroup& lambda, int p);
};

/// The unique catalog label isomorphic to N; throws "catalog gap" otherwise.
inline std::string classify_iso(const PermGroup& N, const std::vector<GammaEntry>& mp_catalog) {
  const GroupTable t = to_table(N);
  const auto inv = detail::invariants(t);
  for (const auto& e : mp_catalog)
    if (e.group.order() == t.order() && detail::invariants(e.group) == inv && find_isomorphism(t, e.group))
      return e.label;
  throw Error("catalog gap: no group of order " + std::to_string(t.order()) + " in the catalog matches");
}

inline Setting Setting::make(const PermGroup& lambda, int p) {
  if (!is_regular(lambda)) throw PreconditionError("lambda(Gamma) must be a regular permutation group");
  const int n = static_cast<int>(lambda.degree());
  if (!is_prime(p) || n % p != 0) throw PreconditionError("p must be a prime dividing |Gamma|");
  Setting s;
  s.lambda = lambda;
  s.p = p;
  s.m = n / p;
  detail::check_pm(p, s.m);
  s.blocks = BlockSystem::build(lambda, p);
  s.alg = TripleAlgebra(p, s.m);
  s.mp_catalog = gamma_catalog(p, s.m);
  s.gamma_label = classify_iso(lambda, s.mp_catalog);
  return s;
}

namespace detail {

/// Errors unless (p, m) lies in F_S (and in F_Q when `need_fq`).
inline void require_forcing(int p, int m, bool need_fq) {
  const auto fs = fs_status(p, m);
  if (fs.status == FsStatus::Fails || fs.status == FsStatus::Unknown)
    throw PreconditionError("(" + std::to_string(p) + ", " + std::to_string(m) + ") is not known to lie in F_S: " +
                            to_string(fs.status) + (fs.witness.empty() ? "" : " (" + fs.witness + ")"));
  if (!need_fq) return;
  const auto fq = fq_status(p, m);
  if (!fq.holds)
    throw PreconditionError("(" + std::to_string(p) + ", " + std::to_string(m) + ") is not in F_Q: " +
                            fq.witnesses.front());
}

/// Generator of P(N) whose triple has a_1 = 1, when N lies in Norm(P).
inline std::optional<Triple> p_part(const Setting& s, const PermGroup& N) {
  for (const auto& f : N.elements()) {
    if (f.is_identity() || !f.pow(s.p).is_identity()) continue;
    const auto t = s.blocks.to_triple(f, s.alg);
    if (t && t->a[0] == 1 % s.p) return t;
  }
  return std::nullopt;
}

inline RegularSubgroupRecord make_record(const Setting& s, std::vector<Perm> gens, const PermGroup& N) {
  RegularSubgroupRecord r;
  r.generators = std::move(gens);
  r.elements = N.elements();
  r.order = static_cast<int>(N.order());
  r.iso_class = classify_iso(N, s.mp_catalog);
  r.inside_norm = true;
  for (const auto& g : N.generators()) r.inside_norm = r.inside_norm && s.blocks.in_norm(g, s.alg);
  r.p_part = p_part(s, N);
  return r;
}

inline std::vector<RegularSubgroupRecord> sorted_unique(std::vector<RegularSubgroupRecord> recs) {
  std::sort(recs.begin(), recs.end());
  recs.erase(std::unique(recs.begin(), recs.end(),
                         [](const auto& x, const auto& y) { return x.elements == y.elements; }),
             recs.end());
  return recs;
}

// -- oracle --------------------------------------------------------------------

/// gamma theta gamma^-1 in <theta> for every generator gamma of L.
inline bool normalized_cyclic(const PermGroup& L, const Perm& theta, int p) {
  std::vector<Perm> powers{theta};
  for (int k = 2; k < p; ++k) powers.push_back(powers.back() * theta);
  for (const auto& g : L.generators()) {
    const Perm c = theta.conjugated_by(g);
    if (std::find(powers.begin(), powers.end(), c) == powers.end()) return false;
  }
  return true;
}

/// All regular N >= <theta> inside Norm_{S_n}(<theta>) that L normalizes.
class Extender {
 public:
  Extender(const PermGroup& L, const Perm& theta, int p)
      : L_(L), theta_(theta), p_(p), n_(theta.degree()), cycles_(cycle_decompose(theta).cycles) {
    where_.resize(n_);
    for (std::size_t i = 0; i < cycles_.size(); ++i)
      for (int k = 0; k < p_; ++k) where_[cycles_[i][k]] = {static_cast<int>(i), k};
  }

  std::vector<std::pair<std::vector<Perm>, PermGroup>> run() {
    search({theta_}, closure({theta_}));
    return std::move(found_);
  }

 private:
  void search(const std::vector<Perm>& gens, const PermGroup& G) {
    std::vector<bool> in_orbit(n_, false);
    for (const auto& f : G.elements()) in_orbit[f(0)] = true;
    const auto x = static_cast<Point>(std::find(in_orbit.begin(), in_orbit.end(), false) - in_orbit.begin());
    if (x == n_) {
      if (normalizes(L_, G)) found_.emplace_back(gens, G);
      return;
    }
    const auto [ix, kx] = where_[x];
    const int mc = static_cast<int>(cycles_.size());
    std::vector<int> rest;
    for (int i = 0; i < mc; ++i)
      if (i != ix) rest.push_back(i);
    // eta theta eta^-1 = theta^c, eta(cycle i) = cycle beta(i), eta(b_i) = theta^{j_i}(b_beta(i)).
    for (int c = 1; c < p_; ++c) {
      std::vector<int> perm = rest;
      do {
        std::vector<int> beta(mc);
        beta[0] = ix;
        for (int i = 1; i < mc; ++i) beta[i] = perm[i - 1];
        std::vector<int> j(mc, 0);
        j[0] = kx;
        while (true) {
          std::vector<Point> img(n_);
          for (int i = 0; i < mc; ++i)
            for (int k = 0; k < p_; ++k) img[cycles_[i][k]] = cycles_[beta[i]][(j[i] + c * k) % p_];
          try_eta(gens, Perm(std::move(img)));
          int t = mc - 1;
          while (t >= 1 && ++j[t] == p_) j[t--] = 0;
          if (t < 1) break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  void try_eta(const std::vector<Perm>& gens, const Perm& eta) {
    std::vector<Perm> g2 = gens;
    g2.push_back(eta);
    auto G = try_closure(g2, n_, n_);
    if (!G || !is_semiregular(*G) || !seen_.insert(G->elements()).second) return;
    search(g2, *G);
  }

  const PermGroup& L_;
  Perm theta_;
  int p_;
  std::size_t n_;
  std::vector<std::vector<Point>> cycles_;
  std::vector<std::pair<int, int>> where_;
  std::set<std::vector<Perm>> seen_;
  std::vector<std::pair<std::vector<Perm>, PermGroup>> found_;
};

/// Every fixed-point-free theta of order p on n points with theta(0) minimal
/// among theta^k(0), i.e. one generator per cyclic subgroup.
template <class Visit>
void for_each_fpf_order_p(std::size_t n, int p, Visit&& visit) {
  std::vector<Point> img(n);
  std::vector<bool> used(n, false);
  std::vector<Point> cyc;
  std::function<void()> place_cycle;
  std::function<void(std::size_t)> extend = [&](std::size_t len) {
    if (static_cast<int>(len) == p) {
      for (int k = 0; k < p; ++k) img[cyc[k]] = cyc[(k + 1) % p];
      place_cycle();
      return;
    }
    for (Point y = 0; y < n; ++y) {
      if (used[y]) continue;
      // The cycle through 0 starts 0 -> (its smallest other point).
      if (cyc.front() == 0 && len >= 2 && y < cyc[1]) continue;
      used[y] = true;
      cyc.push_back(y);
      extend(len + 1);
      cyc.pop_back();
      used[y] = false;
    }
  };
  place_cycle = [&]() {
    const auto s = static_cast<Point>(std::find(used.begin(), used.end(), false) - used.begin());
    if (s == n) {
      visit(Perm(img));
      return;
    }
    const auto saved = cyc;
    used[s] = true;
    cyc = {s};
    extend(1);
    used[s] = false;
    cyc = saved;
  };
  place_cycle();
}

/// Constraint route: the orbit of 0 under P(N) is the orbit O of 0 under the
/// p-Sylow of L; theta is a p-cycle on O and
/// theta(g y) = g theta^{c_g^-1}(y) for generators g of L, g theta g^-1 = theta^{c_g}.
inline std::vector<Perm> constraint_thetas(const PermGroup& L, int p) {
  const std::size_t n = L.degree();
  std::vector<Point> orbit;
  for (const auto& f : L.elements())
    if (!f.is_identity() && f.pow(p).is_identity()) orbit.push_back(f(0));
  orbit.push_back(0);
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  if (static_cast<int>(orbit.size()) != p) throw PreconditionError("oracle: the p-Sylow subgroup of Gamma is not unique");

  const UnitGroup units(p);
  const auto& gens = L.generators();
  std::vector<Perm> out;
  std::vector<Point> tail(orbit.begin() + 2, orbit.end());
  do {
    std::vector<Point> cyc{orbit[0], orbit[1]};
    cyc.insert(cyc.end(), tail.begin(), tail.end());
    std::vector<int> c(gens.size(), 0);  // discrete logs of c_g
    while (true) {
      std::vector<int> img(n, -1);
      for (int k = 0; k < p; ++k) img[cyc[k]] = cyc[(k + 1) % p];
      // Breadth-first over blocks: each queued point is the base of a defined block.
      std::vector<Point> queue{0};
      std::vector<bool> queued(n, false);
      queued[0] = true;
      bool ok = true;
      for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
        std::vector<Point> block{queue[qi]};
        for (int k = 1; k < p; ++k) block.push_back(static_cast<Point>(img[block.back()]));
        for (std::size_t gi = 0; gi < gens.size() && ok; ++gi) {
          const auto& g = gens[gi];
          const long step = units.inv(units.pow(c[gi]));  // theta^{c^-1} advances by this many
          for (int k = 0; k < p && ok; ++k) {
            const Point from = g(block[k]);
            const Point to = g(block[(k + step) % p]);
            if (img[from] == -1) img[from] = to;
            else ok = img[from] == to;
          }
          if (ok && !queued[g(block[0])]) {
            queued[g(block[0])] = true;
            queue.push_back(g(block[0]));
          }
        }
      }
      if (ok && std::find(img.begin(), img.end(), -1) == img.end()) {
        std::vector<Point> pts(img.begin(), img.end());
        std::vector<bool> hit(n, false);
        bool bij = true;
        for (Point x : pts) bij = bij && !hit[x] && (hit[x] = true);
        if (bij) {
          const Perm theta(pts);
          if (theta.order() == static_cast<std::size_t>(p) && !theta.has_fixed_point() &&
              normalized_cyclic(L, theta, p))
            out.push_back(theta);
        }
      }
      std::size_t t = gens.size();
      while (t > 0 && ++c[t - 1] == p - 1) c[--t] = 0;
      if (t == 0) break;
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Perm> exhaustive_thetas(const PermGroup& L, int p) {
  std::vector<Perm> out;
  for_each_fpf_order_p(L.degree(), p, [&](const Perm& theta) {
    if (normalized_cyclic(L, theta, p)) out.push_back(theta);
  });
  return out;
}

}  // namespace detail

enum class OracleVariant { Auto, Exhaustive, Constraint };

/// Brute-force ground truth; makes no use of Norm(P) or triple coordinates.
inline std::vector<RegularSubgroupRecord> oracle_enumerate(const PermGroup& lambda, int p,
                                                           OracleVariant variant = OracleVariant::Auto,
                                                           int degree_cap = kOracleConstraintCap) {
  const int n = static_cast<int>(lambda.degree());
  if (variant == OracleVariant::Auto)
    variant = n <= kOracleExhaustiveCap ? OracleVariant::Exhaustive : OracleVariant::Constraint;
  const int cap = variant == OracleVariant::Exhaustive ? std::min(degree_cap, kOracleExhaustiveCap) : degree_cap;
  if (n > cap)
    throw PreconditionError("oracle: degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  const Setting s = Setting::make(lambda, p);
  detail::require_forcing(p, s.m, false);
  const auto thetas = variant == OracleVariant::Exhaustive ? detail::exhaustive_thetas(lambda, p)
                                                           : detail::constraint_thetas(lambda, p);
  const auto per_theta = parallel_map(thetas, [&](const Perm& theta) {
    std::vector<RegularSubgroupRecord> recs;
    for (auto& [gens, N] : detail::Extender(lambda, theta, p).run())
      recs.push_back(detail::make_record(s, gens, N));
    return recs;
  });
  std::vector<RegularSubgroupRecord> all;
  for (auto& v : per_theta) all.insert(all.end(), v.begin(), v.end());
  return detail::sorted_unique(std::move(all));
}

// -- structured search -----------------------------------------------------------

namespace detail {

/// Regular subgroups T of S_m normalized by the regular group R. Each is
/// sigma^-1 lambda(M) sigma for a catalog group M and a bijection sigma with
/// sigma R sigma^-1 inside Hol(M) = Norm(lambda(M)); sigma(0) = 0 loses nothing
/// because lambda(M) is transitive.
inline std::vector<PermGroup> regular_normalized_subgroups(const PermGroup& R) {
  const int m = static_cast<int>(R.degree());
  if (m == 1) return {closure({}, 1)};
  const GroupTable rt = to_table(R);
  const auto rgens = rt.generating_set();
  std::vector<int> rord;
  for (int g : rgens) rord.push_back(rt.element_order(g));
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  for (const auto& M : catalog(m)) {
    const PermGroup lm = left_regular(M.group);
    std::vector<Perm> hol_gens = lm.generators();
    for (const auto& f : automorphisms(M.group, m)) {
      std::vector<Point> img(f.begin(), f.end());
      hol_gens.emplace_back(std::move(img));
    }
    const PermGroup hol = closure(hol_gens, m);
    // Candidate images per generator: matching order, semiregular cyclic span.
    std::vector<std::vector<const Perm*>> options(rgens.size());
    for (std::size_t j = 0; j < rgens.size(); ++j)
      for (const auto& h : hol.elements()) {
        if (static_cast<int>(h.order()) != rord[j]) continue;
        bool fpf = true;
        Perm q = h;
        for (int t = 1; t < rord[j] && fpf; ++t, q = q * h) fpf = !q.has_fixed_point();
        if (fpf) options[j].push_back(&h);
      }
    if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) continue;
    std::vector<std::size_t> pick(rgens.size(), 0);
    while (true) {
      std::vector<Perm> images;
      for (std::size_t j = 0; j < rgens.size(); ++j) images.push_back(*options[j][pick[j]]);
      const auto psi = extend_homomorphism(rt, rgens, images, Perm(m), [](const Perm& x, const Perm& y) { return x * y; });
      if (psi) {
        std::vector<Point> sigma(m, 0);
        std::vector<bool> hit(m, false);
        bool bij = true;
        for (int i = 0; i < m && bij; ++i) {
          const Point from = R.elements()[i](0), to = (*psi)[i](0);
          sigma[from] = to;
          bij = !hit[to];
          hit[to] = true;
        }
        if (bij) {
          const Perm sg(sigma), si = sg.inverse();
          std::vector<Perm> tg;
          for (const auto& g : lm.generators()) tg.push_back(si * g * sg);
          PermGroup T = closure(tg, m);
          if (normalizes(R, T) && seen.insert(T.elements()).second) out.push_back(std::move(T));
        }
      }
      std::size_t j = rgens.size();
      while (j > 0 && ++pick[j - 1] == options[j - 1].size()) pick[--j] = 0;
      if (j == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& x, const PermGroup& y) { return x.elements() < y.elements(); });
  return out;
}

/// Matrix of d -> (alpha d)_j = d_{alpha^-1(j)} scaled by `scale`.
inline fp::Mat shift_matrix(const Perm& alpha, int scale, int p) {
  const int m = static_cast<int>(alpha.degree());
  fp::Mat A(m, fp::Vec(m, 0));
  for (int i = 0; i < m; ++i) A[alpha(static_cast<Point>(i))][i] = scale % p;
  return A;
}

inline fp::Mat minus_identity(fp::Mat A, int p) {
  for (std::size_t i = 0; i < A.size(); ++i) A[i][i] = fp::reduce(A[i][i] - 1, p);
  return A;
}

inline fp::Mat mat_mul(const fp::Mat& A, const fp::Mat& B, int p) {
  fp::Mat C(A.size(), fp::Vec(B.empty() ? 0 : B[0].size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < B.size(); ++k)
      if (A[i][k])
        for (std::size_t j = 0; j < B[k].size(); ++j) C[i][j] = fp::reduce(C[i][j] + static_cast<std::int64_t>(A[i][k]) * B[k][j], p);
  return C;
}

/// True when scale * alpha(a) is a multiple of a.
inline bool scaled_shift_in_line(const std::vector<int>& a, const Perm& alpha, int scale, int p) {
  const auto b = shift(alpha, a);
  const std::int64_t e = static_cast<std::int64_t>(scale) * b[0] % p * inv_mod(a[0], p) % p;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (static_cast<std::int64_t>(scale) * b[j] % p != e * a[j] % p) return false;
  return true;
}

}  // namespace detail

struct StructuredStats {
  std::int64_t candidate_count = 0;  // (p-1)^(m-1) all-nonzero vectors with a_1 = 1
  int stable_candidates = 0;         // those normalized by lambda(Gamma)
  int complement_shapes = 0;         // regular T in S_m normalized by t(lambda(Gamma))
};

/// Triples of the generators of lambda(Gamma); throws if one lies outside Norm(P).
inline std::vector<Triple> lambda_triples(const Setting& s) {
  std::vector<Triple> out;
  for (const auto& g : s.lambda.generators()) {
    auto t = s.blocks.to_triple(g, s.alg);
    if (!t) throw Error("invariant: a generator of lambda(Gamma) is outside Norm(P)");
    out.push_back(std::move(*t));
  }
  return out;
}

/// All-nonzero a with a_1 = 1 and <(a, u^0, I)> normalized by lambda(Gamma),
/// found by propagating a_{gamma(i)} = u^s e^-1 a_i along generators.
inline std::vector<std::vector<int>> stable_p_parts(const Setting& s) {
  const auto lt = lambda_triples(s);
  const UnitGroup& U = s.alg.units();
  std::vector<std::vector<int>> out;
  std::vector<int> e(lt.size(), 0);  // discrete logs
  while (true) {
    std::vector<int> a(s.m, 0);
    a[0] = 1 % s.p;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      const int i = queue[qi];
      for (std::size_t g = 0; g < lt.size() && ok; ++g) {
        const int j = lt[g].alpha(static_cast<Point>(i));
        const int v = U.mul(U.pow(lt[g].r - e[g]), a[i]);
        if (a[j] == 0) {
          a[j] = v;
          queue.push_back(j);
        } else {
          ok = a[j] == v;
        }
      }
    }
    if (ok && static_cast<int>(queue.size()) == s.m) out.push_back(a);
    std::size_t t = lt.size();
    while (t > 0 && ++e[t - 1] == s.p - 1) e[--t] = 0;
    if (t == 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Brute-force filter of all (p-1)^(m-1) candidates; reference for stable_p_parts.
inline std::vector<std::vector<int>> stable_p_parts_brute(const Setting& s) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(s.m, 1);
  while (true) {
    const Perm theta = s.blocks.to_perm({a, 0, Perm(s.m)}, s.alg);
    if (detail::normalized_cyclic(s.lambda, theta, s.p)) out.push_back(a);
    int t = s.m - 1;
    while (t >= 1 && ++a[t] == s.p) a[t--] = 1;
    if (t < 1) break;
  }
  return out;
}

/// Projection t(lambda(Gamma)) of lambda(Gamma) to S_m.
inline PermGroup block_projection(const Setting& s) {
  std::vector<Perm> gens;
  for (const auto& t : lambda_triples(s)) gens.push_back(t.alpha);
  return closure(gens, s.m);
}

struct StructuredOptions {
  int cap = kStructuredCap;
  unsigned threads = worker_count();
};

/// Search inside Norm(P): N = <theta, lifts of a regular T <= S_m>, with
/// theta = (a, u^0, I) lambda-stable and each lift (v - u^rho(tau) tau(v), u^rho(tau), tau).
/// Complements are conjugate under V because gcd(m, p) = 1, so v ranges over
/// solutions of the normalization equations modulo the stabilizer D.
inline std::vector<RegularSubgroupRecord> structured_enumerate(const Setting& s, const StructuredOptions& opt = {},
                                                               StructuredStats* stats = nullptr) {
  const int n = static_cast<int>(s.degree()), p = s.p, m = s.m;
  if (n > opt.cap)
    throw PreconditionError("structured search: |Gamma| = " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(opt.cap));
  detail::require_forcing(p, m, true);
  const auto lt = lambda_triples(s);
  const PermGroup R = block_projection(s);
  if (!is_regular(R)) throw Error("invariant: t(lambda(Gamma)) is not regular");
  const auto Ts = detail::regular_normalized_subgroups(R);
  const auto as = stable_p_parts(s);
  if (stats) {
    stats->candidate_count = 1;
    for (int i = 1; i < m; ++i) stats->candidate_count *= p - 1;
    stats->stable_candidates = static_cast<int>(as.size());
    stats->complement_shapes = static_cast<int>(Ts.size());
  }
  const UnitGroup& U = s.alg.units();

  auto work = [&](const std::vector<int>& a) {
    std::vector<RegularSubgroupRecord> recs;
    const fp::Mat line_ann = fp::annihilator({a}, m, p);
    const Perm theta = s.blocks.to_perm({a, 0, Perm(m)}, s.alg);
    for (const auto& T : Ts) {
      const GroupTable tt = to_table(T);
      const auto tg = tt.generating_set();
      std::vector<int> rimg(tg.size(), 0);
      while (true) {
        const auto rho = extend_homomorphism(tt, tg, rimg, 0, [&](int x, int y) { return (x + y) % (p - 1); });
        bool ok = rho.has_value();
        for (std::size_t j = 0; j < tg.size() && ok; ++j)
          ok = detail::scaled_shift_in_line(a, T.elements()[tg[j]], U.pow(rimg[j]), p);
        for (std::size_t g = 0; g < lt.size() && ok; ++g)
          for (std::size_t j = 0; j < tg.size() && ok; ++j) {
            const int c = T.index_of(T.elements()[tg[j]].conjugated_by(lt[g].alpha));
            ok = c >= 0 && (*rho)[c] == rimg[j];
          }
        if (ok) {
          // D = {d : (I - u^rho(sigma) sigma) d in <a> for generators sigma}.
          fp::Mat dcon;
          for (std::size_t j = 0; j < tg.size(); ++j) {
            fp::Mat M = detail::shift_matrix(T.elements()[tg[j]], U.pow(rimg[j]), p);
            for (auto& row : M)
              for (auto& x : row) x = fp::reduce(-x, p);
            for (int i = 0; i < m; ++i) M[i][i] = fp::reduce(M[i][i] + 1, p);
            for (auto& row : detail::mat_mul(line_ann, M, p)) dcon.push_back(row);
          }
          const fp::Mat D = fp::nullspace(dcon, m, p);
          const fp::Mat D_ann = fp::annihilator(D, m, p);
          // (u^s gamma - I) v + c in D for every generator (c, u^s, gamma) of lambda(Gamma).
          fp::Mat A;
          fp::Vec rhs;
          for (const auto& g : lt) {
            const fp::Mat M = detail::minus_identity(detail::shift_matrix(g.alpha, U.pow(g.r), p), p);
            for (auto& row : detail::mat_mul(D_ann, M, p)) A.push_back(row);
            for (int x : fp::mul(D_ann, g.a, p)) rhs.push_back(fp::reduce(-x, p));
          }
          const auto v0 = A.empty() ? std::optional<fp::Vec>(fp::Vec(m, 0)) : fp::solve(A, rhs, m, p);
          if (v0) {
            const fp::Mat K = fp::nullspace(A, m, p);
            const fp::Mat reps = fp::complement(D, K, m, p);
            fp::for_each_combination(reps, m, p, [&](const fp::Vec& w) {
              fp::Vec v(m);
              for (int i = 0; i < m; ++i) v[i] = fp::reduce((*v0)[i] + w[i], p);
              std::vector<Perm> gens{theta};
              for (std::size_t j = 0; j < tg.size(); ++j) {
                const Perm& tau = T.elements()[tg[j]];
                const int ur = U.pow(rimg[j]);
                const auto tv = shift(tau, v);
                std::vector<int> x(m);
                for (int i = 0; i < m; ++i) x[i] = fp::reduce(v[i] - static_cast<std::int64_t>(ur) * tv[i], p);
                gens.push_back(s.blocks.to_perm({x, rimg[j], tau}, s.alg));
              }
              const auto N = try_closure(gens, s.degree(), s.degree());
              if (!N || N->order() != s.degree() || !is_regular(*N) || !normalizes(s.lambda, *N))
                throw Error("invariant: structured search built a subgroup that is not a regular lambda-stable N");
              recs.push_back(detail::make_record(s, gens, *N));
            });
          }
        }
        std::size_t j = tg.size();
        while (j > 0 && ++rimg[j - 1] == p - 1) rimg[--j] = 0;
        if (j == 0) break;
      }
    }
    return recs;
  };
  const auto per_a = parallel_map(as, work, opt.threads);
  std::vector<RegularSubgroupRecord> all;
  for (auto& v : per_a) all.insert(all.end(), v.begin(), v.end());
  return detail::sorted_unique(std::move(all));
}

inline std::vector<RegularSubgroupRecord> structured_enumerate(const PermGroup& lambda, int p,
                                                               const StructuredOptions& opt = {},
                                                               StructuredStats* stats = nullptr) {
  return structured_enumerate(Setting::make(lambda, p), opt, stats);
}

// -- counts and invariants -------------------------------------------------------

struct RMatrix {
  std::string gamma_id;
  std::vector<std::pair<std::string, int>> counts;  // catalog order, zeros included
  int total = 0;
};

inline RMatrix r_matrix(const Setting& s, const std::vector<RegularSubgroupRecord>& recs) {
  RMatrix r;
  r.gamma_id = s.gamma_label;
  for (const auto& e : s.mp_catalog) r.counts.emplace_back(e.label, 0);
  for (const auto& rec : recs)
    for (auto& [label, c] : r.counts)
      if (label == rec.iso_class) ++c;
  r.total = static_cast<int>(recs.size());
  return r;
}

inline RMatrix r_matrix(const Setting& s, const StructuredOptions& opt = {}) {
  return r_matrix(s, structured_enumerate(s, opt));
}

/// Violations of the record invariants; empty when everything holds.
inline std::vector<std::string> check_invariants(const Setting& s, const std::vector<RegularSubgroupRecord>& recs) {
  std::vector<std::string> bad;
  const PermGroup R = block_projection(s);
  if (!is_regular(R)) bad.push_back("t(lambda(Gamma)) is not a regular subgroup of S_m");
  bool has_lambda = false;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    const std::string id = "record " + std::to_string(i) + ": ";
    const auto N = try_closure(r.generators, s.degree(), s.degree());
    if (!N || N->elements() != r.elements) {
      bad.push_back(id + "generators do not generate the recorded element set");
      continue;
    }
    if (!is_regular(*N) || static_cast<int>(N->order()) != s.p * s.m) bad.push_back(id + "not regular of order mp");
    if (!normalizes(s.lambda, *N)) bad.push_back(id + "not normalized by lambda(Gamma)");
    if (!r.inside_norm) bad.push_back(id + "not inside Norm(P)");
    if (!r.p_part) {
      bad.push_back(id + "P(N) has no triple form");
    } else {
      const auto& t = *r.p_part;
      if (t.r != 0 || !t.alpha.is_identity()) bad.push_back(id + "P(N) is not in V");
      if (std::find(t.a.begin(), t.a.end(), 0) != t.a.end()) bad.push_back(id + "P(N) has a zero exponent");
    }
    if (r.elements == s.lambda.elements()) {
      has_lambda = true;
      if (r.iso_class != s.gamma_label) bad.push_back(id + "lambda(Gamma) classified as " + r.iso_class);
    }
  }
  if (!has_lambda) bad.push_back("lambda(Gamma) itself is missing");
  return bad;
}

// -- relabeling -------------------------------------------------------------------

/// sigma f sigma^-1 for every f, re-sorted.
inline std::vector<Perm> relabel(const std::vector<Perm>& elems, const Perm& sigma) {
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (const auto& f : elems) out.push_back(f.conjugated_by(sigma));
  std::sort(out.begin(), out.end());
  return out;
}

inline PermGroup relabel(const PermGroup& G, const Perm& sigma) {
  std::vector<Perm> gens;
  for (const auto& g : G.generators()) gens.push_back(g.conjugated_by(sigma));
  return PermGroup(G.degree(), std::move(gens), relabel(G.elements(), sigma));
}

/// The point bijection x -> phi(x) carrying lambda(G) onto lambda(H) for an
/// isomorphism phi: G -> H of Cayley tables.
inline Perm point_map(const GroupMap& phi) { return Perm(std::vector<Point>(phi.begin(), phi.end())); }

}  // namespace hgs
