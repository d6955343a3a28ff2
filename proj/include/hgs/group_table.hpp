#pragma once

// Finite groups given by Cayley tables. Element 0 is always the identity.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hgs/error.hpp"

namespace hgs {

class GroupTable {
 public:
  GroupTable() = default;

  GroupTable(int order, std::vector<int> table, std::string name = {})
      : order_(order), table_(std::move(table)), name_(std::move(name)) {
    if (order_ <= 0 || table_.size() != static_cast<std::size_t>(order_) * order_)
      throw Error("GroupTable: table size does not match order");
    inverses_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == 0) {
          inverses_[a] = b;
          break;
        }
  }

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverses_[a]; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<int>& table() const { return table_; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  int power(int a, long k) const {
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  /// Throws unless the table is a group table with identity 0.
  void validate() const {
    for (int a = 0; a < order_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) throw Error("GroupTable: element 0 is not the identity");
      std::vector<bool> row(order_, false), col(order_, false);
      for (int b = 0; b < order_; ++b) {
        const int x = mul(a, b), y = mul(b, a);
        if (x < 0 || x >= order_ || y < 0 || y >= order_ || row[x] || col[y])
          throw Error("GroupTable: row or column is not a permutation");
        row[x] = col[y] = true;
      }
    }
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("GroupTable: not associative");
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::vector<int> center() const {
    std::vector<int> z;
    for (int a = 0; a < order_; ++a) {
      bool central = true;
      for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
      if (central) z.push_back(a);
    }
    return z;
  }

  /// Sorted elements of the subgroup generated by gens.
  std::vector<int> subgroup(const std::vector<int>& gens) const {
    std::vector<bool> in(order_, false);
    std::vector<int> elems{0};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (int g : gens) {
        const int y = mul(elems[i], g);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  /// Greedy generating set: repeatedly add the highest-order element outside
  /// the current subgroup (ties broken by smallest index).
  std::vector<int> generating_set() const {
    std::vector<int> gens;
    std::vector<int> current{0};
    std::vector<int> orders(order_);
    for (int a = 0; a < order_; ++a) orders[a] = element_order(a);
    while (static_cast<int>(current.size()) < order_) {
      int best = -1;
      for (int a = 1; a < order_; ++a) {
        if (std::binary_search(current.begin(), current.end(), a)) continue;
        if (best < 0 || orders[a] > orders[best]) best = a;
      }
      gens.push_back(best);
      current = subgroup(gens);
    }
    return gens;
  }

  std::size_t commutator_subgroup_order() const {
    std::vector<int> comms;
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        comms.push_back(mul(mul(inverse(a), inverse(b)), mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup(comms).size();
  }

  /// Histogram element order -> count.
  std::map<int, int> order_histogram() const {
    std::map<int, int> h;
    for (int a = 0; a < order_; ++a) ++h[element_order(a)];
    return h;
  }

  /// Number of subgroups of prime order q.
  int count_subgroups_of_prime_order(int q) const {
    int n = 0;
    for (int a = 1; a < order_; ++a)
      if (element_order(a) == q) ++n;
    return n / (q - 1);
  }

  // -- constructions -------------------------------------------------------

  static GroupTable cyclic(int n, std::string name = {}) {
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return GroupTable(n, std::move(t), name.empty() ? "C" + std::to_string(n) : std::move(name));
  }

  /// (a1, b1)(a2, b2) = (a1 a2, b1 b2); index = b * |A| + a.
  static GroupTable direct_product(const GroupTable& A, const GroupTable& B, std::string name = {}) {
    const int na = A.order(), nb = B.order(), n = na * nb;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        t[static_cast<std::size_t>(x) * n + y] =
            B.mul(x / na, y / na) * na + A.mul(x % na, y % na);
    return GroupTable(n, std::move(t),
                      name.empty() ? A.name() + "x" + B.name() : std::move(name));
  }

  /// K x| H with h acting on K by action[h] (a permutation of K's indices that
  /// must be an automorphism, and h -> action[h] a homomorphism).
  /// (k1, h1)(k2, h2) = (k1 * action[h1](k2), h1 h2); index = h * |K| + k.
  static GroupTable semidirect(const GroupTable& K, const GroupTable& H,
                               const std::vector<std::vector<int>>& action, std::string name = {}) {
    const int nk = K.order(), nh = H.order(), n = nk * nh;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      const int k1 = x % nk, h1 = x / nk;
      for (int y = 0; y < n; ++y) {
        const int k2 = y % nk, h2 = y / nk;
        t[static_cast<std::size_t>(x) * n + y] = H.mul(h1, h2) * nk + K.mul(k1, action[h1][k2]);
      }
    }
    return GroupTable(n, std::move(t), std::move(name));
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Extend generator images to a map on all of G, checking the homomorphism
/// property phi(x g) = phi(x) phi(g) on every edge of the Cayley graph.
/// Returns nullopt when the images do not define a homomorphism.
template <class T, class Mul>
std::optional<std::vector<T>> extend_homomorphism(const GroupTable& G, const std::vector<int>& gens,
                                                  const std::vector<T>& images, const T& identity,
                                                  Mul&& mul) {
  std::vector<std::optional<T>> phi(G.order());
  phi[0] = identity;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int y = G.mul(x, gens[j]);
      T img = mul(*phi[x], images[j]);
      if (!phi[y]) {
        phi[y] = std::move(img);
        queue.push_back(y);
      } else if (!(*phi[y] == img)) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != G.order()) throw Error("extend_homomorphism: gens do not generate");
  std::vector<T> out;
  out.reserve(G.order());
  for (auto& v : phi) out.push_back(std::move(*v));
  return out;
}

}  // namespace hgs
