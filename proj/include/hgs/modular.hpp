#pragma once

// Integer helpers: primality, factorization, residues mod p, primitive roots.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hgs/error.hpp"

namespace hgs {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<int> primes_up_to(int bound) {
  std::vector<int> out;
  for (int q = 2; q <= bound; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

/// Prime factorization as prime -> exponent, ascending.
inline std::map<std::int64_t, int> factorize(std::int64_t n) {
  std::map<std::int64_t, int> f;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool is_squarefree(std::int64_t n) {
  for (const auto& [q, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& [q, e] : factorize(n)) r = r / q * (q - 1);
  return r;
}

/// Nonnegative residue of a modulo n (n >= 1).
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t result = 1;
  base = mod(base, n);
  while (exp > 0) {
    if (exp & 1) result = result * base % n;
    base = base * base % n;
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo n; throws when gcd(a, n) != 1.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  std::int64_t g = n, x = 0, g1 = mod(a, n), x1 = 1;
  while (g1 != 0) {
    const std::int64_t q = g / g1;
    std::int64_t t = g - q * g1;
    g = g1;
    g1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw PreconditionError("inv_mod: not invertible");
  return mod(x, n);
}

/// Multiplicative order of a modulo n (gcd(a, n) = 1).
inline std::int64_t mult_order(std::int64_t a, std::int64_t n) {
  if (n == 1) return 1;
  std::int64_t k = 1;
  std::int64_t x = mod(a, n);
  while (x != 1) {
    x = x * mod(a, n) % n;
    ++k;
  }
  return k;
}

/// Smallest primitive root mod the prime p (1 for p = 2).
inline int smallest_primitive_root(int p) {
  if (!is_prime(p)) throw PreconditionError("primitive root requested for non-prime");
  if (p == 2) return 1;
  const auto f = factorize(p - 1);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : f)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

}  // namespace hgs
