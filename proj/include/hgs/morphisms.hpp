#pragma once

// Brute-force isomorphisms and automorphisms of small groups: backtrack over
// images of a greedy generating set, constrained by element orders.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/group_table.hpp"

namespace hgs {

inline constexpr int kDefaultOracleCap = 42;

using GroupMap = std::vector<int>;  // image of element i at slot i

/// Calls visit(map) for every isomorphism G -> H until visit returns false.
inline void for_each_isomorphism(const GroupTable& G, const GroupTable& H,
                                 const std::function<bool(const GroupMap&)>& visit) {
  if (G.order() != H.order()) return;
  const std::vector<int> gens = G.generating_set();
  std::vector<int> gorder(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) gorder[j] = G.element_order(gens[j]);
  std::vector<int> horder(H.order());
  for (int x = 0; x < H.order(); ++x) horder[x] = H.element_order(x);

  std::vector<int> images(gens.size());
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (stop) return;
    if (j == gens.size()) {
      auto phi = extend_homomorphism<int>(G, gens, images, 0,
                                          [&](int a, int b) { return H.mul(a, b); });
      if (!phi) return;
      std::vector<bool> hit(H.order(), false);
      for (int y : *phi) {
        if (hit[y]) return;
        hit[y] = true;
      }
      if (!visit(*phi)) stop = true;
      return;
    }
    // The image of a generator must lie outside the subgroup generated by
    // the earlier images (otherwise the map cannot be injective).
    std::vector<int> prev(images.begin(), images.begin() + j);
    const std::vector<int> sub = H.subgroup(prev);
    for (int y = 1; y < H.order() && !stop; ++y) {
      if (horder[y] != gorder[j]) continue;
      if (std::binary_search(sub.begin(), sub.end(), y)) continue;
      images[j] = y;
      rec(j + 1);
    }
  };
  rec(0);
}

inline std::vector<GroupMap> isomorphisms(const GroupTable& G, const GroupTable& H) {
  std::vector<GroupMap> out;
  for_each_isomorphism(G, H, [&](const GroupMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

inline std::optional<GroupMap> find_isomorphism(const GroupTable& G, const GroupTable& H) {
  std::optional<GroupMap> out;
  for_each_isomorphism(G, H, [&](const GroupMap& f) {
    out = f;
    return false;
  });
  return out;
}

/// All automorphisms of G; throws when |G| exceeds cap.
inline std::vector<GroupMap> automorphisms(const GroupTable& G, int cap = kDefaultOracleCap) {
  if (G.order() > cap)
    throw PreconditionError("automorphism oracle: |G| = " + std::to_string(G.order()) +
                            " exceeds cap " + std::to_string(cap));
  return isomorphisms(G, G);
}

/// |Aut(G)| by brute force.
inline long aut_order_oracle(const GroupTable& G, int cap = kDefaultOracleCap) {
  if (G.order() > cap)
    throw PreconditionError("automorphism oracle: |G| = " + std::to_string(G.order()) +
                            " exceeds cap " + std::to_string(cap));
  long n = 0;
  for_each_isomorphism(G, G, [&](const GroupMap&) {
    ++n;
    return true;
  });
  return n;
}

inline GroupMap compose_maps(const GroupMap& f, const GroupMap& g) {
  GroupMap h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

/// Conjugation x -> g x g^-1 as a map.
inline GroupMap inner_automorphism(const GroupTable& G, int g) {
  GroupMap f(G.order());
  for (int x = 0; x < G.order(); ++x) f[x] = G.mul(G.mul(g, x), G.inverse(g));
  return f;
}

}  // namespace hgs
