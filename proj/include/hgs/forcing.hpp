#pragma once

// Sylow-forcing membership: (p, m) in F_S (every group of order mp has a
// unique p-Sylow subgroup) and (p, m) in F_Q (p divides no |Aut(Q)|, |Q| = m),
// plus the prime-triple table built from them.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/group_table.hpp"
#include "hgs/groups.hpp"
#include "hgs/modular.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/parallel.hpp"

namespace hgs {

enum class FsStatus { ForcedByCongruence, HoldsByClassification, Fails, Unknown };

inline std::string to_string(FsStatus s) {
  switch (s) {
    case FsStatus::ForcedByCongruence: return "forced-by-congruence";
    case FsStatus::HoldsByClassification: return "holds-by-classification";
    case FsStatus::Fails: return "fails";
    case FsStatus::Unknown: return "unknown";
  }
  return "unknown";
}

struct FsResult {
  FsStatus status = FsStatus::Unknown;
  std::string witness;  // a group of order mp with n_p > 1 when status is Fails
  int witness_np = 0;
};

/// Largest order for which the non-squarefree classification route builds
/// Cayley tables.
inline constexpr int kForcingTableCap = 2000;

namespace detail {

inline void check_coprime(int p, int m) {
  if (!is_prime(p)) throw PreconditionError("forcing: p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("forcing: m must be positive");
  if (std::gcd(p, m) != 1) throw PreconditionError("forcing: gcd(p, m) != 1");
}

/// Number of subgroups of order p in C_a x|_k C_b, (x, h)(y, g) = (x + k^h y, h + g).
inline int metacyclic_np(int a, int b, int k, int p) {
  std::vector<int> kpow(b);
  for (int h = 0; h < b; ++h) kpow[h] = static_cast<int>(pow_mod(k, h, a));
  int count = 0;
  for (int h = 0; h < b; ++h) {
    if (static_cast<std::int64_t>(h) * p % b != 0) continue;
    for (int x = 0; x < a; ++x) {
      if (x == 0 && h == 0) continue;
      // (x, h)^p: the first coordinate is x (1 + k^h + ... + k^{(p-1)h}).
      std::int64_t s = 0;
      for (int t = 0; t < p; ++t) s += kpow[static_cast<std::int64_t>(t) * h % b];
      if (static_cast<std::int64_t>(x) * (s % a) % a == 0) ++count;
    }
  }
  return count / (p - 1);
}

/// Automorphisms of K as index maps; cyclic groups use x -> kx directly.
inline std::vector<GroupMap> automorphism_list(const CatalogEntry& K) {
  if (!K.cyclic) return automorphisms(K.group, K.m);
  std::vector<GroupMap> out;
  for (int k = 1; k <= std::max(1, K.m - 1); ++k) {
    if (std::gcd(k, K.m) != 1) continue;
    GroupMap f(K.m);
    for (int x = 0; x < K.m; ++x) f[x] = static_cast<int>(static_cast<std::int64_t>(k) * x % K.m);
    out.push_back(std::move(f));
  }
  return out;
}

inline std::string paren(const std::string& name) {
  return name.find_first_of("x:") == std::string::npos ? name : "(" + name + ")";
}

/// Searches K x| H over catalog groups with |K| |H| = n, gcd(|K|, |H|) = 1
/// for a group with more than one p-Sylow subgroup.
inline std::optional<FsResult> table_witness(int p, int n) {
  for (auto a : divisors(n)) {
    const int b = static_cast<int>(n / a);
    if (a == 1 || b == 1 || std::gcd(static_cast<int>(a), b) != 1) continue;
    if (!catalog_supported(static_cast<int>(a)) || !catalog_supported(b)) continue;
    for (const auto& K : catalog(static_cast<int>(a))) {
      if (!K.cyclic && K.m > kDefaultOracleCap) continue;
      const auto auts = automorphism_list(K);
      for (const auto& H : catalog(b)) {
        const auto gens = H.group.generating_set();
        std::vector<std::vector<const GroupMap*>> options(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const int ord = H.group.element_order(gens[j]);
          for (const auto& f : auts) {
            GroupMap g = f;
            for (int t = 1; t < ord; ++t) g = compose_maps(f, g);
            bool id = true;
            for (int x = 0; x < K.m && id; ++x) id = g[x] == x;
            if (id) options[j].push_back(&f);
          }
        }
        std::vector<std::size_t> pick(gens.size(), 0);
        GroupMap ident(K.m);
        std::iota(ident.begin(), ident.end(), 0);
        while (true) {
          std::vector<GroupMap> images;
          for (std::size_t j = 0; j < gens.size(); ++j) images.push_back(*options[j][pick[j]]);
          const auto action = extend_homomorphism(H.group, gens, images, ident,
                                                  [](const GroupMap& x, const GroupMap& y) { return compose_maps(x, y); });
          if (action) {
            const auto G = GroupTable::semidirect(K.group, H.group, *action);
            const int np = G.count_subgroups_of_prime_order(p);
            if (np > 1) return FsResult{FsStatus::Fails, paren(K.name) + ":" + paren(H.name), np};
          }
          std::size_t j = gens.size();
          while (j > 0 && ++pick[j - 1] == options[j - 1].size()) pick[--j] = 0;
          if (j == 0) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// True when no divisor d > 1 of m satisfies d = 1 (mod p).
inline bool congruence_forced(int p, int m) {
  detail::check_coprime(p, m);
  for (auto d : divisors(m))
    if (d > 1 && d % p == 1) return false;
  return true;
}

/// Four-valued F_S membership. Squarefree orders are decided completely via
/// the metacyclic groups C_a x| C_b (every group of squarefree order has this
/// form); other orders can only produce a witness from the catalog family.
inline FsResult fs_status(int p, int m) {
  if (congruence_forced(p, m)) return {FsStatus::ForcedByCongruence, {}, 0};
  const int n = p * m;
  if (is_squarefree(n)) {
    for (auto a64 : divisors(n)) {
      const int a = static_cast<int>(a64), b = n / a;
      if (a == 1) continue;
      for (int k = 2; k < a; ++k) {
        if (std::gcd(k, a) != 1 || pow_mod(k, b, a) != 1) continue;
        const int np = detail::metacyclic_np(a, b, k, p);
        if (np > 1)
          return {FsStatus::Fails, "C" + std::to_string(a) + ":C" + std::to_string(b) + " (k=" + std::to_string(k) + ")",
                  np};
      }
    }
    return {FsStatus::HoldsByClassification, {}, 0};
  }
  if (n <= kForcingTableCap)
    if (auto w = detail::table_witness(p, n)) return *w;
  return {FsStatus::Unknown, {}, 0};
}

struct FqResult {
  bool holds = true;
  std::vector<std::string> witnesses;  // "Aut(Q) = k" for each Q with p | k
};

/// F_Q membership from the catalog's automorphism orders.
inline FqResult fq_status(int p, int m) {
  detail::check_coprime(p, m);
  FqResult r;
  for (const auto& q : catalog(m)) {
    if (q.aut_order % p == 0) {
      r.holds = false;
      r.witnesses.push_back("|Aut(" + q.name + ")| = " + std::to_string(q.aut_order));
    }
  }
  return r;
}

struct ForcingRecord {
  int p = 0;
  int m = 0;
  FsResult fs;
  std::optional<FqResult> fq;  // nullopt when groups of order m are not catalogued
};

inline ForcingRecord forcing_record(int p, int m) {
  ForcingRecord rec{p, m, fs_status(p, m), std::nullopt};
  try {
    rec.fq = fq_status(p, m);
  } catch (const CatalogIncomplete&) {
  }
  return rec;
}

/// |Aut(Q)| for the groups of order q1 q2: cyclic or the nonabelian C_q2 x| C_q1.
inline std::int64_t aut_order_two_primes(int q1, int q2, bool abelian) {
  if (!is_prime(q1) || !is_prime(q2) || q1 >= q2) throw PreconditionError("aut_order_two_primes: need primes q1 < q2");
  if (abelian) return static_cast<std::int64_t>(q1 - 1) * (q2 - 1);
  if ((q2 - 1) % q1 != 0)
    throw PreconditionError("aut_order_two_primes: no nonabelian group of order " + std::to_string(q1 * q2));
  return static_cast<std::int64_t>(q2) * (q2 - 1);
}

struct TripleRow {
  int p1 = 0, p2 = 0, p3 = 0;
  int p = 0;
  int m = 0;
  int mp = 0;
  bool p_lt_m = false;
  friend bool operator==(const TripleRow&, const TripleRow&) = default;
};

using PrimeTriple = std::array<int, 3>;

/// Rows (p1 < p2 < p3 <= max_p3, p one of them, m the product of the other
/// two) with congruence-forced F_S membership and F_Q membership, in
/// dictionary order. `through` keeps only triples up to and including it.
inline std::vector<TripleRow> triples_table(int max_p3, std::optional<PrimeTriple> through = std::nullopt) {
  const auto primes = primes_up_to(max_p3);
  std::vector<TripleRow> candidates;
  std::set<int> ms;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      for (std::size_t k = j + 1; k < primes.size(); ++k) {
        const PrimeTriple t{primes[i], primes[j], primes[k]};
        if (through && t > *through) continue;
        const int mp = t[0] * t[1] * t[2];
        for (int p : t) {
          const int m = mp / p;
          if (!congruence_forced(p, m)) continue;
          candidates.push_back({t[0], t[1], t[2], p, m, mp, p < m});
          ms.insert(m);
        }
      }
  const std::vector<int> mlist(ms.begin(), ms.end());
  const auto auts = parallel_map(mlist, [](int m) {
    std::vector<std::int64_t> out;
    for (const auto& q : catalog(m)) out.push_back(q.aut_order);
    return out;
  });
  std::map<int, std::vector<std::int64_t>> aut_by_m;
  for (std::size_t i = 0; i < mlist.size(); ++i) aut_by_m[mlist[i]] = auts[i];
  std::vector<TripleRow> rows;
  for (const auto& r : candidates) {
    bool fq = true;
    for (auto a : aut_by_m[r.m]) fq = fq && a % r.p != 0;
    if (fq) rows.push_back(r);
  }
  return rows;
}

inline std::string table_csv(const std::vector<TripleRow>& rows) {
  std::string s = "p1,p2,p3,p,m,mp,p_lt_m\n";
  for (const auto& r : rows)
    s += std::to_string(r.p1) + "," + std::to_string(r.p2) + "," + std::to_string(r.p3) + "," + std::to_string(r.p) +
         "," + std::to_string(r.m) + "," + std::to_string(r.mp) + "," + (r.p_lt_m ? "*" : "") + "\n";
  return s;
}

/// Parses the output of table_csv.
inline std::vector<TripleRow> parse_table_csv(const std::string& text) {
  std::vector<TripleRow> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != "p1,p2,p3,p,m,mp,p_lt_m") throw Error("table csv: unexpected header '" + line + "'");
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::size_t a = 0;
    while (true) {
      const std::size_t c = line.find(',', a);
      f.push_back(line.substr(a, c == std::string::npos ? std::string::npos : c - a));
      if (c == std::string::npos) break;
      a = c + 1;
    }
    if (f.size() != 7 || (f[6] != "*" && !f[6].empty())) throw Error("table csv: malformed row '" + line + "'");
    try {
      rows.push_back({std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]), std::stoi(f[3]), std::stoi(f[4]),
                      std::stoi(f[5]), f[6] == "*"});
    } catch (const std::logic_error&) {
      throw Error("table csv: malformed row '" + line + "'");
    }
  }
  return rows;
}

}  // namespace hgs
