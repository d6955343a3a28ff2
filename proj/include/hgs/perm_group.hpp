#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/group_table.hpp"
#include "hgs/perm.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A permutation group stored by its full (sorted) element list.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements)
      : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }

  bool contains(const Perm& f) const { return std::binary_search(elements_.begin(), elements_.end(), f); }

  /// Index of f in the sorted element list, or -1.
  int index_of(const Perm& f) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
    return (it != elements_.end() && *it == f) ? static_cast<int>(it - elements_.begin()) : -1;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// Subgroup generated by gens, or nullopt once it exceeds `limit` elements.
inline std::optional<PermGroup> try_closure(const std::vector<Perm>& gens, std::size_t degree,
                                            std::size_t limit) {
  if (degree == 0 && !gens.empty()) degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("closure: generators of different degree");
  std::vector<Perm> elems{Perm(degree)};
  std::unordered_set<Perm, PermHash> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = elems[i] * g;
      if (seen.insert(y).second) {
        if (elems.size() >= limit) return std::nullopt;
        elems.push_back(std::move(y));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return PermGroup(degree, gens, std::move(elems));
}

/// Subgroup generated by gens; throws GroupTooLarge past `cap` elements.
inline PermGroup closure(const std::vector<Perm>& gens, std::size_t degree = 0,
                         std::size_t cap = kDefaultClosureCap) {
  auto g = try_closure(gens, degree, cap);
  if (!g) throw GroupTooLarge("closure: group too large (cap " + std::to_string(cap) + ")");
  return std::move(*g);
}

inline bool is_semiregular(const PermGroup& G) {
  for (const auto& f : G.elements())
    if (!f.is_identity() && f.has_fixed_point()) return false;
  return true;
}

/// Semiregular of order equal to the degree.
inline bool is_regular(const PermGroup& G) { return G.order() == G.degree() && is_semiregular(G); }

inline bool is_transitive(const PermGroup& G) {
  if (G.degree() == 0) return true;
  std::vector<bool> hit(G.degree(), false);
  for (const auto& f : G.elements()) hit[f(0)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

/// True iff g H g^-1 = H for every generator g of G.
inline bool normalizes(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree()) throw Error("normalizes: degree mismatch");
  const auto& hgens = H.generators().empty() ? H.elements() : H.generators();
  for (const auto& g : G.generators().empty() ? G.elements() : G.generators()) {
    const Perm gi = g.inverse();
    for (const auto& h : hgens)
      if (!H.contains(g * h * gi)) return false;
  }
  return true;
}

/// Cayley table of G, element i being G.elements()[i] (the identity sorts first).
inline GroupTable to_table(const PermGroup& G, std::string name = {}) {
  const int n = static_cast<int>(G.order());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = G.index_of(G.elements()[a] * G.elements()[b]);
      if (c < 0) throw Error("to_table: element set is not closed");
      t[static_cast<std::size_t>(a) * n + b] = c;
    }
  return GroupTable(n, std::move(t), std::move(name));
}

}  // namespace hgs
