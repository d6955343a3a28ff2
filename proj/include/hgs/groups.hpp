#pragma once

// Groups of order m (the complements Q), the groups Gamma = C_p x|_tau Q of
// order mp, their left regular representations, and a brute-force check of
// the automorphism lemma for such Gamma.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/group_table.hpp"
#include "hgs/modular.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

struct CatalogEntry {
  int m = 0;
  std::string name;
  GroupTable group;
  std::vector<int> generators;  // the generators tau is specified on
  long aut_order = 0;
  bool abelian = false;
  bool cyclic = false;
};

namespace detail {

/// Smallest k > 1 with k^q = 1 mod r (q | r - 1).
inline int smallest_order_q_unit(int q, int r) {
  for (int k = 2; k < r; ++k)
    if (mult_order(k, r) == q) return k;
  throw Error("no unit of the requested order");
}

/// C_r x| C_q with the generator of C_q acting as x -> x^k.
inline GroupTable metacyclic(int r, int q, int k, std::string name) {
  const GroupTable K = GroupTable::cyclic(r), H = GroupTable::cyclic(q);
  std::vector<std::vector<int>> action(q, std::vector<int>(r));
  for (int h = 0; h < q; ++h) {
    const auto kh = pow_mod(k, h, r);
    for (int x = 0; x < r; ++x) action[h][x] = static_cast<int>(kh * x % r);
  }
  return GroupTable::semidirect(K, H, action, std::move(name));
}

inline std::string two_prime_nonabelian_name(int q, int r) {
  if (q == 2) return r == 3 ? "S3" : "D" + std::to_string(r);
  return "C" + std::to_string(r) + ":C" + std::to_string(q);
}

inline GroupTable quaternion8() {
  // Element index = 4 * sign + unit, units (1, i, j, k) = 0..3.
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
      t[a * 8 + b] = 4 * s + unit[a % 4][b % 4];
    }
  return GroupTable(8, std::move(t), "Q8");
}

inline long aut_order_formula(int m, bool cyclic) {
  if (cyclic) return euler_phi(m);
  const auto f = factorize(m);
  if (f.size() == 2 && f.begin()->second == 1 && f.rbegin()->second == 1) {
    const long r = f.rbegin()->first;
    return r * (r - 1);
  }
  throw Error("no closed form for this automorphism group");
}

}  // namespace detail

inline bool catalog_supported(int m) {
  if (m == 1 || m == 4 || m == 8 || m == 9 || is_prime(m)) return true;
  const auto f = factorize(m);
  return f.size() == 2 && f.begin()->second == 1 && f.rbegin()->second == 1;
}

/// All groups of order m up to isomorphism, with |Aut|. Automorphism orders
/// come from the brute-force oracle when m <= oracle_cap and from the
/// classical formulas otherwise (cyclic and two-prime groups only).
inline std::vector<CatalogEntry> catalog(int m, int oracle_cap = kDefaultOracleCap) {
  if (m < 1 || !catalog_supported(m))
    throw CatalogIncomplete("catalog incomplete: groups of order " + std::to_string(m) +
                            " are not classified here");
  std::vector<std::pair<GroupTable, bool>> groups;  // (group, cyclic)
  if (m == 4) {
    groups = {{GroupTable::cyclic(4), true},
              {GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)), false}};
  } else if (m == 8) {
    const auto c2 = GroupTable::cyclic(2);
    groups = {{GroupTable::cyclic(8), true},
              {GroupTable::direct_product(GroupTable::cyclic(4), c2), false},
              {GroupTable::direct_product(GroupTable::direct_product(c2, c2), c2), false},
              {detail::metacyclic(4, 2, 3, "D4"), false},
              {detail::quaternion8(), false}};
  } else if (m == 9) {
    groups = {{GroupTable::cyclic(9), true},
              {GroupTable::direct_product(GroupTable::cyclic(3), GroupTable::cyclic(3)), false}};
  } else {
    groups = {{GroupTable::cyclic(m), true}};
    const auto f = factorize(m);
    if (f.size() == 2) {
      const int q = static_cast<int>(f.begin()->first), r = static_cast<int>(f.rbegin()->first);
      if ((r - 1) % q == 0)
        groups.push_back({detail::metacyclic(r, q, detail::smallest_order_q_unit(q, r),
                                             detail::two_prime_nonabelian_name(q, r)),
                          false});
    }
  }
  std::vector<CatalogEntry> out;
  for (auto& [g, cyc] : groups) {
    CatalogEntry e;
    e.m = m;
    e.name = g.name();
    e.generators = g.generating_set();
    e.aut_order = m <= oracle_cap ? aut_order_oracle(g, oracle_cap) : detail::aut_order_formula(m, cyc);
    e.abelian = g.is_abelian();
    e.cyclic = cyc;
    e.group = std::move(g);
    out.push_back(std::move(e));
  }
  return out;
}

inline CatalogEntry catalog_entry(int m, const std::string& name) {
  for (auto& e : catalog(m))
    if (e.name == name) return e;
  throw Error("no group named \"" + name + "\" of order " + std::to_string(m));
}

// -- Gamma = C_p x|_tau Q -----------------------------------------------------

struct GammaSpec {
  int p = 0;
  int m = 0;
  std::string q_id;
  std::vector<int> tau;  // image in U_p of each catalog generator of Q; empty = trivial

  bool tau_trivial() const {
    return std::all_of(tau.begin(), tau.end(), [&](int e) { return mod(e, p) == 1; });
  }

  /// "p=7,m=6,q=C6,tau=[3]" or "...,tau=trivial".
  std::string to_string() const {
    std::string s = "p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",q=" + q_id + ",tau=";
    if (tau_trivial()) return s + "trivial";
    s += '[';
    for (std::size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + std::to_string(tau[i]);
    return s + ']';
  }

  static GammaSpec parse(const std::string& text) {
    GammaSpec spec;
    std::map<std::string, std::string> kv;
    std::size_t i = 0;
    while (i < text.size()) {
      const auto eq = text.find('=', i);
      if (eq == std::string::npos) throw PreconditionError("gamma spec: expected key=value in \"" + text + "\"");
      const std::string key = text.substr(i, eq - i);
      std::size_t end;
      if (eq + 1 < text.size() && text[eq + 1] == '[') {
        end = text.find(']', eq);
        if (end == std::string::npos) throw PreconditionError("gamma spec: unterminated list");
        ++end;
      } else {
        end = text.find(',', eq);
        if (end == std::string::npos) end = text.size();
      }
      kv[key] = text.substr(eq + 1, end - eq - 1);
      i = end < text.size() ? end + 1 : end;
    }
    for (const char* k : {"p", "m", "q"})
      if (!kv.count(k)) throw PreconditionError(std::string("gamma spec: missing key ") + k);
    try {
      spec.p = std::stoi(kv["p"]);
      spec.m = std::stoi(kv["m"]);
    } catch (const std::exception&) {
      throw PreconditionError("gamma spec: p and m must be integers");
    }
    spec.q_id = kv["q"];
    const std::string tau = kv.count("tau") ? kv["tau"] : "trivial";
    if (tau != "trivial") {
      if (tau.size() < 2 || tau.front() != '[' || tau.back() != ']')
        throw PreconditionError("gamma spec: tau must be 'trivial' or [e1,...]");
      std::stringstream ss(tau.substr(1, tau.size() - 2));
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) spec.tau.push_back(std::stoi(item));
    }
    return spec;
  }
};

namespace detail {

inline void check_pm(int p, int m) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("m must be positive");
  if (std::gcd(p, m) != 1)
    throw PreconditionError("gcd(p, m) != 1 for p = " + std::to_string(p) + ", m = " + std::to_string(m));
}

/// tau extended to all of Q as residues in U_p; throws if not a homomorphism.
inline std::vector<int> extend_tau(const GammaSpec& spec, const CatalogEntry& q) {
  std::vector<int> images = spec.tau;
  if (images.empty()) images.assign(q.generators.size(), 1);
  if (images.size() != q.generators.size())
    throw PreconditionError("tau lists " + std::to_string(images.size()) + " images but " + q.name +
                            " has " + std::to_string(q.generators.size()) + " generators");
  for (auto& e : images) {
    e = static_cast<int>(mod(e, spec.p));
    if (e == 0) throw PreconditionError("tau image 0 is not a unit mod p");
  }
  auto full = extend_homomorphism<int>(q.group, q.generators, images, 1, [&](int a, int b) {
    return static_cast<int>(static_cast<long>(a) * b % spec.p);
  });
  if (!full) throw PreconditionError("tau does not extend to a homomorphism Q -> Aut(C_p)");
  return *full;
}

inline std::string gamma_name(const GammaSpec& spec, const CatalogEntry& q, int image_order,
                              bool several_image_orders) {
  const std::string cp = "C" + std::to_string(spec.p);
  if (image_order == 1) {
    if (q.cyclic) return "C" + std::to_string(spec.p * spec.m);
    if (spec.m == 1) return cp;
    return cp + "x" + q.name;
  }
  if (is_prime(spec.m)) return two_prime_nonabelian_name(spec.m, spec.p);
  std::string s = cp + ":" + (q.name.find_first_of("x:") != std::string::npos ? "(" + q.name + ")" : q.name);
  if (several_image_orders) s += "_" + std::to_string(image_order);
  return s;
}

}  // namespace detail

/// Every homomorphism Q -> U_p given by generator images (residues).
inline std::vector<std::vector<int>> tau_choices(int p, const CatalogEntry& q) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(q.generators.size(), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == img.size()) {
      if (extend_homomorphism<int>(q.group, q.generators, img, 1, [&](int a, int b) {
            return static_cast<int>(static_cast<long>(a) * b % p);
          }))
        out.push_back(img);
      return;
    }
    for (int e = 1; e < p; ++e) {
      img[j] = e;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

/// Cayley table of C_p x|_tau Q; element index = (Q index) * p + (P exponent).
inline GroupTable build_gamma(const GammaSpec& spec) {
  detail::check_pm(spec.p, spec.m);
  const CatalogEntry q = catalog_entry(spec.m, spec.q_id);
  const std::vector<int> tau = detail::extend_tau(spec, q);
  std::vector<std::vector<int>> action(spec.m, std::vector<int>(spec.p));
  for (int h = 0; h < spec.m; ++h)
    for (int x = 0; x < spec.p; ++x) action[h][x] = static_cast<int>(static_cast<long>(tau[h]) * x % spec.p);

  int image_order = 1;
  for (int e : tau) image_order = std::max<int>(image_order, static_cast<int>(mult_order(e, spec.p)));
  // Whether Q admits nontrivial images of more than one order in U_p.
  std::set<int> orders;
  for (const auto& img : tau_choices(spec.p, q)) {
    int o = 1;
    for (int e : img) o = std::max<int>(o, static_cast<int>(mult_order(e, spec.p)));
    if (o > 1) orders.insert(o);
  }

  GroupTable g = GroupTable::semidirect(GroupTable::cyclic(spec.p), q.group, action,
                                        detail::gamma_name(spec, q, image_order, orders.size() > 1));
  if (g.count_subgroups_of_prime_order(spec.p) != 1)
    throw PreconditionError("the p-Sylow subgroup of " + g.name() + " is not unique");
  return g;
}

inline Perm lambda_perm(const GroupTable& G, int g) {
  std::vector<Point> img(G.order());
  for (int x = 0; x < G.order(); ++x) img[x] = static_cast<Point>(G.mul(g, x));
  return Perm(std::move(img));
}

/// lambda(G) on |G| points: point x is element x, lambda(g)(x) = g x.
inline PermGroup left_regular(const GroupTable& G) {
  std::vector<Perm> gens, elems;
  for (int g : G.generating_set()) gens.push_back(lambda_perm(G, g));
  for (int g = 0; g < G.order(); ++g) elems.push_back(lambda_perm(G, g));
  std::sort(elems.begin(), elems.end());
  return PermGroup(static_cast<std::size_t>(G.order()), std::move(gens), std::move(elems));
}

// -- all groups of order mp in the family C_p x| Q ------------------------------

struct GammaEntry {
  std::string label;
  GammaSpec spec;
  GroupTable group;
};

namespace detail {

struct Invariants {
  std::map<int, int> orders;
  std::size_t center = 0;
  std::size_t derived = 0;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline Invariants invariants(const GroupTable& g) {
  return {g.order_histogram(), g.center().size(), g.commutator_subgroup_order()};
}

}  // namespace detail

/// One representative per isomorphism class among C_p x|_tau Q, Q ranging
/// over catalog(m) and tau over Hom(Q, U_p). When every group of order mp has
/// a normal p-Sylow subgroup this is every group of order mp.
inline std::vector<GammaEntry> gamma_catalog(int p, int m) {
  detail::check_pm(p, m);
  std::vector<GammaEntry> out;
  std::vector<detail::Invariants> inv;
  for (const auto& q : catalog(m)) {
    for (const auto& tau : tau_choices(p, q)) {
      GammaSpec spec{p, m, q.name, tau};
      if (spec.tau_trivial()) spec.tau.clear();
      GroupTable g;
      try {
        g = build_gamma(spec);
      } catch (const PreconditionError&) {
        continue;  // p-Sylow not unique: outside the family
      }
      const auto gi = detail::invariants(g);
      bool dup = false;
      for (std::size_t i = 0; i < out.size() && !dup; ++i)
        dup = inv[i] == gi && find_isomorphism(g, out[i].group).has_value();
      if (dup) continue;
      std::string label = g.name();
      int clash = 0;
      for (const auto& e : out)
        if (e.label.rfind(label, 0) == 0) ++clash;
      if (clash) label += std::string(1, static_cast<char>('a' + clash));
      g.set_name(label);
      out.push_back({label, spec, g});
      inv.push_back(gi);
    }
  }
  return out;
}

// -- automorphism lemma ----------------------------------------------------------

struct AutLemmaReport {
  GammaSpec spec;
  std::string gamma_name;
  char branch = '?';         // 'a': tau trivial, 'b': tau nontrivial
  long aut_order = 0;
  long aut_q_order = 0;
  int order_p_automorphisms = 0;
  bool inner_by_p = false;   // every order-p automorphism is conjugation by P
  bool holds = false;
  std::string detail;
};

/// Brute-forces Aut(Gamma) and checks the lemma's conclusion for spec:
/// (a) tau trivial => p does not divide |Aut(Gamma)|;
/// (b) tau nontrivial => Aut(Gamma) has a unique p-Sylow subgroup, made of
///     conjugations by elements of P.
inline AutLemmaReport verify_aut_lemma(const GammaSpec& spec, int oracle_cap = kDefaultOracleCap) {
  detail::check_pm(spec.p, spec.m);
  const CatalogEntry q = catalog_entry(spec.m, spec.q_id);
  if (q.aut_order % spec.p == 0)
    throw PreconditionError("hypothesis fails: p = " + std::to_string(spec.p) + " divides |Aut(" + q.name +
                            ")| = " + std::to_string(q.aut_order));
  if (spec.p * spec.m > oracle_cap)
    throw PreconditionError("hypothesis fails: |Gamma| = " + std::to_string(spec.p * spec.m) +
                            " exceeds the oracle cap " + std::to_string(oracle_cap));
  const GroupTable g = build_gamma(spec);

  AutLemmaReport rep;
  rep.spec = spec;
  rep.gamma_name = g.name();
  rep.aut_q_order = q.aut_order;
  rep.branch = spec.tau_trivial() ? 'a' : 'b';
  const auto auts = automorphisms(g, oracle_cap);
  rep.aut_order = static_cast<long>(auts.size());

  GroupMap id(g.order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<GroupMap> order_p;
  for (const auto& f : auts) {
    if (f == id) continue;
    GroupMap x = f;
    for (int k = 1; k < spec.p; ++k) x = compose_maps(f, x);
    if (x == id) order_p.push_back(f);
  }
  rep.order_p_automorphisms = static_cast<int>(order_p.size());

  // P = {(k, e)} = element indices 0..p-1.
  std::vector<GroupMap> inner_p;
  for (int x = 1; x < spec.p; ++x) inner_p.push_back(inner_automorphism(g, x));
  rep.inner_by_p = std::all_of(order_p.begin(), order_p.end(), [&](const GroupMap& f) {
    return std::find(inner_p.begin(), inner_p.end(), f) != inner_p.end();
  });

  long pp = 1;
  for (long n = rep.aut_order; n % spec.p == 0; n /= spec.p) pp *= spec.p;
  if (rep.branch == 'a') {
    rep.holds = rep.aut_order % spec.p != 0;
    rep.detail = std::to_string(spec.p) + (rep.holds ? " does not divide " : " divides ") +
                 "|Aut(" + g.name() + ")| = " + std::to_string(rep.aut_order);
  } else {
    // A p-Sylow of order p is unique iff there are exactly p - 1 elements of order p.
    const bool unique = pp == spec.p && rep.order_p_automorphisms == spec.p - 1;
    rep.holds = unique && rep.inner_by_p;
    rep.detail = "|Aut(" + g.name() + ")| = " + std::to_string(rep.aut_order) + ", p-part " +
                 std::to_string(pp) + ", " + std::to_string(rep.order_p_automorphisms) +
                 " automorphisms of order p, " + (rep.inner_by_p ? "all" : "not all") +
                 " conjugation by P";
  }
  return rep;
}

}  // namespace hgs
