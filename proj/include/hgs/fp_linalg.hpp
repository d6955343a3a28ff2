#pragma once

// Dense linear algebra over the prime field F_p. Vectors and matrices hold
// residues in [0, p); matrices are lists of rows.

#include <cstdint>
#include <optional>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/modular.hpp"

namespace hgs::fp {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

struct Echelon {
  Mat rows;                 // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

inline int reduce(std::int64_t x, int p) { return static_cast<int>(mod(x, p)); }

/// Reduced row echelon form of A with `cols` columns.
inline Echelon rref(Mat A, int cols, int p) {
  Echelon e;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < A.size(); ++c) {
    std::size_t piv = row;
    while (piv < A.size() && A[piv][c] % p == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[row], A[piv]);
    const int inv = static_cast<int>(inv_mod(A[row][c], p));
    for (auto& x : A[row]) x = reduce(static_cast<std::int64_t>(x) * inv, p);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c] % p == 0) continue;
      const std::int64_t f = A[i][c];
      for (int j = 0; j < cols; ++j) A[i][j] = reduce(A[i][j] - f * A[row][j], p);
    }
    e.pivots.push_back(c);
    ++row;
  }
  A.resize(row);
  e.rows = std::move(A);
  return e;
}

inline int rank(const Mat& A, int cols, int p) { return static_cast<int>(rref(A, cols, p).pivots.size()); }

/// Basis of {x : A x = 0}.
inline Mat nullspace(const Mat& A, int cols, int p) {
  const Echelon e = rref(A, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  Mat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = reduce(-e.rows[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rows spanning the annihilator {w : w . d = 0 for every d in span(basis)}.
inline Mat annihilator(const Mat& basis, int dim, int p) { return nullspace(basis, dim, p); }

/// One solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Mat& A, const Vec& b, int cols, int p) {
  if (A.size() != b.size()) throw Error("fp::solve: row count mismatch");
  Mat aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(reduce(b[i], p));
  const Echelon e = rref(std::move(aug), cols + 1, p);
  Vec x(cols, 0);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

inline Vec mul(const Mat& A, const Vec& x, int p) {
  Vec y(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<std::int64_t>(A[i][j]) * x[j];
    y[i] = reduce(s, p);
  }
  return y;
}

inline bool in_span(const Mat& basis, const Vec& v, int dim, int p) {
  Mat with = basis;
  with.push_back(v);
  return rank(with, dim, p) == rank(basis, dim, p);
}

/// Vectors extending a basis of `sub` to one of `sub + whole`; their F_p
/// combinations are coset representatives of (sub + whole) / sub.
inline Mat complement(const Mat& sub, const Mat& whole, int dim, int p) {
  Mat acc = sub, out;
  int r = rank(acc, dim, p);
  for (const auto& v : whole) {
    acc.push_back(v);
    const int r2 = rank(acc, dim, p);
    if (r2 > r) {
      out.push_back(v);
      r = r2;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

/// Calls visit(v) for every F_p-combination of the rows of `basis`, in
/// lexicographic order of the coefficient vectors.
template <class Visit>
void for_each_combination(const Mat& basis, int dim, int p, Visit&& visit) {
  std::vector<int> coef(basis.size(), 0);
  while (true) {
    Vec v(dim, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < dim; ++j) v[j] = reduce(v[j] + static_cast<std::int64_t>(coef[i]) * basis[i][j], p);
    visit(v);
    std::size_t k = basis.size();
    while (k > 0 && ++coef[k - 1] == p) coef[--k] = 0;
    if (k == 0) return;
  }
}

}  // namespace hgs::fp
