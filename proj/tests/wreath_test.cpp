#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hgs/groups.hpp"
#include "hgs/s40.hpp"
#include "hgs/wreath.hpp"

using namespace hgs;

namespace {

Triple random_triple(const TripleAlgebra& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> a(0, alg.p() - 1), r(0, alg.p() - 2);
  Triple t{std::vector<int>(alg.m()), r(rng), Perm()};
  for (auto& x : t.a) x = a(rng);
  std::vector<Point> al(alg.m());
  std::iota(al.begin(), al.end(), Point{0});
  std::shuffle(al.begin(), al.end(), rng);
  t.alpha = Perm(al);
  return t;
}

/// Standard layout: block i = points 5i..5i+p-1, pi the consecutive shift.
BlockSystem standard_blocks(int p, int m) {
  std::vector<std::vector<Point>> cycles;
  for (int i = 0; i < m; ++i) {
    std::vector<Point> c;
    for (int k = 0; k < p; ++k) c.push_back(static_cast<Point>(i * p + k));
    cycles.push_back(c);
  }
  return BlockSystem::from_generator(Perm::from_cycles(static_cast<std::size_t>(p) * m, cycles), p);
}

}  // namespace

TEST(Units, SmallestPrimitiveRoot) {
  EXPECT_EQ(UnitGroup(2).u(), 1);
  EXPECT_EQ(UnitGroup(3).u(), 2);
  EXPECT_EQ(UnitGroup(5).u(), 2);
  EXPECT_EQ(UnitGroup(7).u(), 3);
  EXPECT_EQ(UnitGroup(23).u(), 5);
  const UnitGroup u7(7);
  for (int x = 1; x < 7; ++x) EXPECT_EQ(u7.pow(u7.log(x)), x);
}

TEST(BlockSystem, CyclicSix) {
  const auto g = build_gamma(GammaSpec::parse("p=3,m=2,q=C2"));
  const auto b = BlockSystem::build(left_regular(g), 3);
  EXPECT_EQ(b.m(), 2);
  EXPECT_EQ(b.gamma(), (std::vector<Point>{0, 3}));
  EXPECT_EQ(b.pi().to_string(), "(1,2,3)(4,5,6)");
}

TEST(BlockSystem, S40Layout) {
  const auto b = BlockSystem::from_generator(s40::pi(), 5);
  ASSERT_EQ(b.m(), 8);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(b.gamma()[i], 5 * i);
    EXPECT_EQ(b.pi_factors()[i], s40::pi_factor(i + 1));
  }
}

TEST(BlockSystem, SingleBlock) {
  const auto b = BlockSystem::build(left_regular(GroupTable::cyclic(5)), 5);
  EXPECT_EQ(b.m(), 1);
  EXPECT_EQ(b.pi().to_string(), "(1,2,3,4,5)");
}

TEST(BlockSystem, Errors) {
  EXPECT_THROW(BlockSystem::build(left_regular(GroupTable::cyclic(9)), 3), PreconditionError);
  EXPECT_THROW(BlockSystem::from_generator(Perm::parse("(1,2,3)", 6), 3), PreconditionError);
  EXPECT_THROW(BlockSystem::from_generator(Perm::parse("(1,2,3,4,5,6)", 6), 3), PreconditionError);
}

TEST(BlockSystem, RelabeledGroupUsesSmallestImage) {
  // Relabel C_15 so the 5-Sylow is not laid out in consecutive ranges.
  const auto g = GroupTable::cyclic(15);
  const auto lam = left_regular(g);
  std::vector<Point> sigma(15);
  std::iota(sigma.begin(), sigma.end(), Point{0});
  std::mt19937 rng(5);
  std::shuffle(sigma.begin() + 1, sigma.end(), rng);
  const Perm s(sigma);
  std::vector<Perm> gens;
  for (const auto& f : lam.generators()) gens.push_back(f.conjugated_by(s));
  const auto relabeled = closure(gens);
  const auto b = BlockSystem::build(relabeled, 5);
  EXPECT_EQ(b.m(), 3);
  EXPECT_EQ(b.gamma()[0], 0);
  std::set<Point> images;
  for (const auto& f : relabeled.elements())
    if (!f.is_identity() && f.pow(5).is_identity()) images.insert(f(0));
  EXPECT_EQ(b.pi()(0), *images.begin());
}

TEST(TripleToPerm, Examples) {
  const TripleAlgebra alg(5, 8);
  const auto b = BlockSystem::from_generator(s40::pi(), 5);
  EXPECT_TRUE(b.to_perm(alg.identity(), alg).is_identity());
  EXPECT_EQ(b.to_perm(alg.pi(), alg), s40::pi());

  const Triple t{std::vector<int>(8, 1), 0, Perm::parse("(1,2,3,4,5)", 8)};
  const Perm f = b.to_perm(t, alg);
  EXPECT_EQ(f.order(), 5u);
  EXPECT_TRUE(is_semiregular(closure({f})));
  EXPECT_TRUE(b.in_cent(f, alg));
  EXPECT_FALSE(b.in_v(f, alg));
  EXPECT_EQ(f * s40::pi(), s40::pi() * f);
}

TEST(PermToTriple, Examples) {
  const TripleAlgebra alg(5, 8);
  const auto b = BlockSystem::from_generator(s40::pi(), 5);
  EXPECT_EQ(b.to_triple(s40::pi(), alg), alg.pi());
  EXPECT_FALSE(b.to_triple(Perm::parse("(1,2)", 40), alg).has_value());
  EXPECT_FALSE(b.to_triple(Perm::parse("(1,6)", 40), alg).has_value());
  EXPECT_FALSE(b.to_triple(Perm(39), alg).has_value());
}

TEST(PermToTriple, ExhaustiveRoundTripThreeTwo) {
  const TripleAlgebra alg(3, 2);
  const auto b = standard_blocks(3, 2);
  std::set<Perm> images;
  alg.for_each([&](const Triple& t) {
    const Perm f = b.to_perm(t, alg);
    images.insert(f);
    ASSERT_EQ(b.to_triple(f, alg), t);
  });
  EXPECT_EQ(images.size(), 36u);
  EXPECT_EQ(TripleAlgebra::norm_order(3, 2), 36);
}

TEST(TripleAlgebra, MulExamples) {
  const TripleAlgebra alg(5, 4);
  std::mt19937 rng(2);
  const Triple t = random_triple(alg, rng);
  EXPECT_EQ(alg.mul(alg.identity(), t), t);
  EXPECT_EQ(alg.mul(t, alg.identity()), t);
  EXPECT_EQ(alg.mul(alg.pi(), alg.pi()), (Triple{{2, 2, 2, 2}, 0, Perm(4)}));
  EXPECT_THROW(alg.mul(t, TripleAlgebra(5, 3).identity()), Error);
}

TEST(TripleAlgebra, MulIsTheActionHomomorphism) {
  const TripleAlgebra alg(5, 4);
  const auto b = standard_blocks(5, 4);
  std::mt19937 rng(10);
  for (int i = 0; i < 10000; ++i) {
    const Triple s = random_triple(alg, rng), t = random_triple(alg, rng);
    ASSERT_EQ(b.to_perm(alg.mul(s, t), alg), b.to_perm(s, alg) * b.to_perm(t, alg));
    ASSERT_EQ(alg.mul(t, alg.inverse(t)), alg.identity());
  }
}

TEST(TripleAlgebra, DisplayedProductNeedsMatchingScalars) {
  // The u^s-scaled display agrees with the action law exactly when it does not
  // matter which factor's scalar is used.
  const TripleAlgebra alg(5, 2);
  const auto b = standard_blocks(5, 2);
  int agree = 0, disagree = 0;
  alg.for_each([&](const Triple& s) {
    const Triple t{{1, 0}, (s.r + 1) % 4, Perm(2)};
    const bool same = b.to_perm(alg.mul_as_displayed(s, t), alg) == b.to_perm(s, alg) * b.to_perm(t, alg);
    (same ? agree : disagree)++;
    const Triple t2{{1, 3}, s.r, Perm::parse("(1,2)", 2)};
    EXPECT_EQ(alg.mul_as_displayed(s, t2), alg.mul(s, t2));
  });
  EXPECT_EQ(agree, 0);
  EXPECT_EQ(disagree, 200);
}

TEST(TripleAlgebra, PowExamples) {
  const TripleAlgebra alg(5, 4);
  std::mt19937 rng(4);
  const Triple t = random_triple(alg, rng);
  EXPECT_EQ(alg.pow(t, 0), alg.identity());
  EXPECT_EQ(alg.pow(alg.pi(), 5), alg.identity());
  EXPECT_EQ(alg.pow(t, 1), t);
}

TEST(TripleAlgebra, PowClosedFormMatchesIteration) {
  const TripleAlgebra alg(5, 4);
  std::mt19937 rng(6);
  for (int i = 0; i < 200; ++i) {
    const Triple t = random_triple(alg, rng);
    for (int n = 1; n <= 40; ++n) ASSERT_EQ(alg.pow(t, n), alg.pow_iterated(t, n));
  }
}

TEST(TripleAlgebra, ConjExamples) {
  const TripleAlgebra alg(5, 4);
  std::mt19937 rng(8);
  const Triple t = random_triple(alg, rng);
  EXPECT_EQ(alg.conj(alg.identity(), t), t);
  for (int i = 0; i < 50; ++i) {
    const Triple g = random_triple(alg, rng);
    const int us = alg.units().pow(g.r);
    EXPECT_EQ(alg.conj(g, alg.pi()), (Triple{std::vector<int>(4, us), 0, Perm(4)}));
  }
}

TEST(TripleAlgebra, ConjClosedFormMatchesDefinition) {
  const TripleAlgebra alg(3, 4);
  std::mt19937 rng(12);
  for (int i = 0; i < 5000; ++i) {
    const Triple g = random_triple(alg, rng), t = random_triple(alg, rng);
    const Triple c = alg.conj(g, t);
    ASSERT_EQ(alg.conj_closed_form(g, t), c);
    ASSERT_EQ(c.r, t.r);
    ASSERT_EQ(c.alpha, g.alpha * t.alpha * g.alpha.inverse());
  }
}

TEST(TripleAlgebra, NormOrder) {
  EXPECT_EQ(TripleAlgebra::norm_order(3, 2), 36);
  EXPECT_EQ(TripleAlgebra::norm_order(5, 8), 63'000'000'000LL);
  EXPECT_EQ(TripleAlgebra::norm_order(2, 1), 2);
}

TEST(TripleAlgebra, Rendering) {
  const TripleAlgebra alg(5, 8);
  const Triple t{std::vector<int>(8, 1), 0, Perm::parse("(1,2,3,4,5)", 8)};
  EXPECT_EQ(alg.to_string(t), "([1,1,1,1,1,1,1,1], u^0, (1,2,3,4,5))");
}

TEST(Divides, S40Example) {
  const auto b = BlockSystem::from_generator(s40::pi(), 5);
  const Perm th = s40::theta();
  EXPECT_TRUE(b.divides(5, th));  // pi_6
  EXPECT_TRUE(b.divides(7, th));
  EXPECT_FALSE(b.divides(0, th));  // pi_1
  for (int i = 0; i < 8; ++i) EXPECT_TRUE(b.divides(i, s40::pi()));
  EXPECT_FALSE(b.divides(0, Perm(40)));
}

// -- properties --------------------------------------------------------------

TEST(WreathProperty, ImageIsASubgroupOfTheRightOrder) {
  for (auto [p, m] : {std::pair{3, 2}, std::pair{5, 2}}) {
    const TripleAlgebra alg(p, m);
    const auto b = standard_blocks(p, m);
    std::vector<Perm> image;
    alg.for_each([&](const Triple& t) { image.push_back(b.to_perm(t, alg)); });
    std::sort(image.begin(), image.end());
    EXPECT_EQ(std::unique(image.begin(), image.end()), image.end());
    EXPECT_EQ(static_cast<std::int64_t>(image.size()), TripleAlgebra::norm_order(p, m));
    EXPECT_EQ(closure(image).elements(), image);
  }
}

TEST(WreathProperty, CentralizerIsRZero) {
  const TripleAlgebra alg(5, 2);
  const auto b = standard_blocks(5, 2);
  alg.for_each([&](const Triple& t) {
    const Perm f = b.to_perm(t, alg);
    ASSERT_EQ(f * b.pi() == b.pi() * f, t.r == 0);
  });
}

TEST(WreathProperty, DivisibilityIsStableUnderPowers) {
  const TripleAlgebra alg(3, 4);
  const auto b = standard_blocks(3, 4);
  alg.for_each([&](const Triple& t) {
    const Perm f = b.to_perm(t, alg);
    if (f.order() != 3) return;
    for (int i = 0; i < 4; ++i)
      if (b.divides(i, f))
        for (int e = 1; e < 3; ++e) ASSERT_TRUE(b.divides(i, f.pow(e)));
  });
}

TEST(WreathProperty, FixedBlocksDivideMovedBlocksDoNot) {
  // theta = (a, 1, alpha) of order p, fixed-point-free, alpha != I.
  const TripleAlgebra alg(3, 4);
  const auto b = standard_blocks(3, 4);
  int seen = 0;
  alg.for_each([&](const Triple& t) {
    if (t.r != 0 || t.alpha.is_identity()) return;
    const Perm f = b.to_perm(t, alg);
    if (f.order() != 3 || f.has_fixed_point()) return;
    ++seen;
    for (int i = 0; i < 4; ++i) ASSERT_EQ(b.divides(i, f), t.alpha(static_cast<Point>(i)) == i);
  });
  EXPECT_GT(seen, 0);
}

TEST(WreathProperty, S40ThetaFacts) {
  const auto b = BlockSystem::from_generator(s40::pi(), 5);
  const TripleAlgebra alg(5, 8);
  const Perm th = s40::theta();
  EXPECT_EQ(th * s40::pi(), s40::pi() * th);
  EXPECT_EQ(th.order(), 5u);
  EXPECT_FALSE(th.has_fixed_point());
  EXPECT_FALSE(b.in_v(th, alg));
  EXPECT_TRUE(b.in_cent(th, alg));
}

TEST(S40, FullReportPasses) {
  const auto rep = s40::verify();
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(rep.checks.size(), 8u);
}

TEST(S40, PerturbedThetaFailsCommutation) {
  const Perm bad = Perm::parse("(1,2)", 40) * s40::theta();
  const auto rep = s40::verify(bad);
  EXPECT_FALSE(rep.checks[0].passed);
  EXPECT_FALSE(rep.all_passed());
}

TEST(S40, ThetaSquaredStillCentralizes) {
  const auto rep = s40::verify(s40::theta().pow(2));
  EXPECT_TRUE(rep.checks[0].passed);
  EXPECT_TRUE(rep.checks[3].passed);
  EXPECT_TRUE(rep.all_passed());
}

TEST(S40, ClosureOfPiAndTheta) {
  const auto g = closure({s40::pi(), s40::theta()});
  EXPECT_EQ(g.order(), 25u);
}
