#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hgs/fp_linalg.hpp"

using namespace hgs;
using fp::Mat;
using fp::Vec;

namespace {

Mat random_matrix(int rows, int cols, int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, p - 1);
  Mat A(rows, Vec(cols));
  for (auto& r : A)
    for (auto& x : r) x = d(rng);
  return A;
}

}  // namespace

TEST(FpLinalg, RrefExample) {
  const Mat A{{2, 4, 1}, {1, 2, 4}};
  const auto e = fp::rref(A, 3, 5);
  EXPECT_EQ(e.pivots, (std::vector<int>{0, 2}));
  EXPECT_EQ(e.rows, (Mat{{1, 2, 0}, {0, 0, 1}}));
  EXPECT_EQ(fp::rank(A, 3, 5), 2);
  EXPECT_EQ(fp::rank({}, 3, 5), 0);
}

TEST(FpLinalg, NullspaceExample) {
  const Mat A{{1, 1, 1}};
  const auto k = fp::nullspace(A, 3, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(fp::mul(A, v, 3), Vec{0});
  EXPECT_EQ(fp::nullspace({}, 2, 7).size(), 2u);
}

TEST(FpLinalg, SolveExamples) {
  const Mat A{{1, 2}, {3, 4}};
  const auto x = fp::solve(A, {5, 6}, 2, 7);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(fp::mul(A, *x, 7), (Vec{5, 6}));
  EXPECT_FALSE(fp::solve({{1, 1}, {2, 2}}, {1, 0}, 2, 3).has_value());
  EXPECT_THROW(fp::solve(A, {1}, 2, 7), Error);
}

TEST(FpLinalg, AnnihilatorOfLine) {
  const Mat line{{1, 2, 3, 4}};
  const auto w = fp::annihilator(line, 4, 5);
  EXPECT_EQ(w.size(), 3u);
  for (const auto& r : w) EXPECT_EQ(fp::mul({r}, line[0], 5), Vec{0});
}

TEST(FpLinalg, ComplementCountsCosets) {
  const Mat sub{{1, 0, 0}};
  const Mat whole{{1, 0, 0}, {2, 0, 0}, {0, 1, 1}, {1, 1, 1}};
  const auto c = fp::complement(sub, whole, 3, 3);
  EXPECT_EQ(c.size(), 1u);
  std::set<Vec> seen;
  fp::for_each_combination(c, 3, 3, [&](const Vec& v) { seen.insert(v); });
  EXPECT_EQ(seen.size(), 3u);
}

TEST(FpLinalgProperty, SolutionsAndKernelsAreCorrect) {
  std::mt19937 rng(9);
  for (int p : {2, 3, 5, 7}) {
    for (int t = 0; t < 200; ++t) {
      const int rows = 1 + t % 5, cols = 1 + (t / 5) % 6;
      const Mat A = random_matrix(rows, cols, p, rng);
      const auto k = fp::nullspace(A, cols, p);
      EXPECT_EQ(static_cast<int>(k.size()) + fp::rank(A, cols, p), cols);
      for (const auto& v : k) ASSERT_EQ(fp::mul(A, v, p), Vec(rows, 0));
      const Vec x0 = random_matrix(1, cols, p, rng)[0];
      const Vec b = fp::mul(A, x0, p);
      const auto x = fp::solve(A, b, cols, p);
      ASSERT_TRUE(x.has_value());
      ASSERT_EQ(fp::mul(A, *x, p), b);
    }
  }
}

TEST(FpLinalgProperty, SolveMatchesBruteForce) {
  std::mt19937 rng(4);
  const int p = 3, cols = 3;
  for (int t = 0; t < 100; ++t) {
    const Mat A = random_matrix(2, cols, p, rng);
    const Vec b = random_matrix(1, 2, p, rng)[0];
    bool any = false;
    fp::for_each_combination(Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, cols, p,
                             [&](const Vec& v) { any = any || fp::mul(A, v, p) == b; });
    EXPECT_EQ(fp::solve(A, b, cols, p).has_value(), any);
  }
}
