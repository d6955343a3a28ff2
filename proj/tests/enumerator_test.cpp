#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hgs/enumerator.hpp"

using namespace hgs;

namespace {

PermGroup lambda_of(const std::string& spec) { return left_regular(build_gamma(GammaSpec::parse(spec))); }

std::map<std::string, int> counts_of(const std::vector<RegularSubgroupRecord>& recs) {
  std::map<std::string, int> c;
  for (const auto& r : recs) ++c[r.iso_class];
  return c;
}

std::vector<std::vector<Perm>> element_sets(const std::vector<RegularSubgroupRecord>& recs) {
  std::vector<std::vector<Perm>> out;
  for (const auto& r : recs) out.push_back(r.elements);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::pair<int, int>> kSmallOrders{{3, 2}, {5, 2}, {7, 2}, {5, 3}, {7, 3}};

}  // namespace

TEST(ClassifyIso, Examples) {
  const auto c6 = gamma_catalog(3, 2);
  EXPECT_EQ(classify_iso(left_regular(GroupTable::cyclic(6)), c6), "C6");
  EXPECT_EQ(classify_iso(left_regular(catalog_entry(6, "S3").group), c6), "S3");

  const auto s = Setting::make(lambda_of("p=7,m=3,q=C3"), 7);
  EXPECT_EQ(s.gamma_label, "C21");
  bool saw_nonabelian = false;
  for (const auto& r : oracle_enumerate(s.lambda, 7))
    if (r.iso_class == "C7:C3") saw_nonabelian = r.inside_norm;
  EXPECT_TRUE(saw_nonabelian);
}

TEST(ClassifyIso, CatalogGap) {
  // Order 6 catalog offered for a group of order 10.
  EXPECT_THROW(classify_iso(left_regular(GroupTable::cyclic(10)), gamma_catalog(3, 2)), Error);
}

TEST(OracleEnumerate, CyclicSix) {
  const auto L = lambda_of("p=3,m=2,q=C2,tau=trivial");
  const auto recs = oracle_enumerate(L, 3);
  EXPECT_TRUE(std::any_of(recs.begin(), recs.end(), [&](const auto& r) { return r.elements == L.elements(); }));
  for (const auto& r : recs) EXPECT_TRUE(r.inside_norm);
  EXPECT_EQ(counts_of(recs), (std::map<std::string, int>{{"C6", 1}, {"S3", 2}}));
}

TEST(OracleEnumerate, SymmetricThree) {
  const auto recs = oracle_enumerate(lambda_of("p=3,m=2,q=C2,tau=[2]"), 3);
  EXPECT_EQ(counts_of(recs), (std::map<std::string, int>{{"C6", 3}, {"S3", 2}}));
}

TEST(OracleEnumerate, DihedralTenInsideNorm) {
  const auto s = Setting::make(lambda_of("p=5,m=2,q=C2,tau=[4]"), 5);
  const auto recs = oracle_enumerate(s.lambda, 5);
  EXPECT_EQ(recs.size(), 7u);
  for (const auto& r : recs)
    for (const auto& f : r.elements) ASSERT_TRUE(s.blocks.in_norm(f, s.alg));
}

TEST(OracleEnumerate, VariantsAgree) {
  for (auto [p, m] : {std::pair{3, 2}, std::pair{5, 2}})
    for (const auto& e : gamma_catalog(p, m)) {
      const auto L = left_regular(e.group);
      EXPECT_EQ(element_sets(oracle_enumerate(L, p, OracleVariant::Exhaustive)),
                element_sets(oracle_enumerate(L, p, OracleVariant::Constraint)))
          << e.label;
    }
}

TEST(OracleEnumerate, Errors) {
  EXPECT_THROW(oracle_enumerate(lambda_of("p=7,m=2,q=C2"), 7, OracleVariant::Exhaustive), PreconditionError);
  EXPECT_THROW(oracle_enumerate(lambda_of("p=7,m=6,q=C6"), 7), PreconditionError);
  EXPECT_THROW(oracle_enumerate(lambda_of("p=3,m=4,q=C4"), 3), PreconditionError);  // A4 breaks F_S
}

TEST(OracleEnumerate, FpfGeneratorCount) {
  // One generator per cyclic subgroup: 10! / (5^2 2!) / 4 subgroups of type 5^2 in S_10.
  int n = 0;
  detail::for_each_fpf_order_p(10, 5, [&](const Perm&) { ++n; });
  EXPECT_EQ(n, 18144);
  n = 0;
  detail::for_each_fpf_order_p(6, 3, [&](const Perm&) { ++n; });
  EXPECT_EQ(n, 20);
}

TEST(StructuredEnumerate, CyclicSixMatchesOracle) {
  const auto L = lambda_of("p=3,m=2,q=C2");
  EXPECT_EQ(element_sets(structured_enumerate(L, 3)), element_sets(oracle_enumerate(L, 3)));
}

TEST(StructuredEnumerate, CandidateCountOrderForty) {
  StructuredStats stats;
  StructuredOptions opt;
  opt.cap = 40;
  const auto recs = structured_enumerate(lambda_of("p=5,m=8,q=C8"), 5, opt, &stats);
  EXPECT_EQ(stats.candidate_count, 16384);
  EXPECT_LE(stats.stable_candidates, 16384);
  EXPECT_FALSE(recs.empty());
}

TEST(StructuredEnumerate, OrderTwentyOneBothClasses) {
  for (const auto& e : gamma_catalog(7, 3)) {
    const auto L = left_regular(e.group);
    EXPECT_EQ(element_sets(structured_enumerate(L, 7)), element_sets(oracle_enumerate(L, 7, OracleVariant::Constraint)))
        << e.label;
  }
}

TEST(StructuredEnumerate, Errors) {
  try {
    structured_enumerate(lambda_of("p=3,m=4,q=C4"), 3);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("F_S"), std::string::npos);
  }
  EXPECT_THROW(structured_enumerate(lambda_of("p=5,m=14,q=C14"), 5), PreconditionError);  // cap 42
  EXPECT_THROW(Setting::make(lambda_of("p=3,m=2,q=C2"), 5), PreconditionError);
  EXPECT_THROW(Setting::make(lambda_of("p=3,m=2,q=C2,tau=[2]"), 2), PreconditionError);  // S3: three 2-Sylows
  EXPECT_THROW(Setting::make(lambda_of("p=3,m=2,q=C2"), 4), PreconditionError);
}

TEST(StablePParts, PropagationMatchesBruteForce) {
  for (auto [p, m] : {std::pair{5, 4}, std::pair{7, 6}, std::pair{5, 3}, std::pair{7, 3}})
    for (const auto& e : gamma_catalog(p, m)) {
      const auto s = Setting::make(left_regular(e.group), p);
      EXPECT_EQ(stable_p_parts(s), stable_p_parts_brute(s)) << e.label;
    }
}

TEST(RegularNormalizedSubgroups, CountsInDegreeSix) {
  // Regular subgroups of S_6 normalized by lambda(C6) and by lambda(S3).
  EXPECT_EQ(detail::regular_normalized_subgroups(left_regular(GroupTable::cyclic(6))).size(), 3u);
  EXPECT_EQ(detail::regular_normalized_subgroups(left_regular(catalog_entry(6, "S3").group)).size(), 5u);
  EXPECT_EQ(detail::regular_normalized_subgroups(closure({}, 1)).size(), 1u);
}

TEST(RMatrix, CyclicSix) {
  const auto s = Setting::make(lambda_of("p=3,m=2,q=C2"), 3);
  const auto r = r_matrix(s);
  EXPECT_EQ(r.gamma_id, "C6");
  EXPECT_EQ(r.counts, (std::vector<std::pair<std::string, int>>{{"C6", 1}, {"S3", 2}}));
  EXPECT_EQ(r.total, 3);
}

TEST(RMatrix, RecordedCounts) {
  // Counts produced by the structured search and confirmed against the
  // oracle wherever the degree allows (orders 10, 14, 21).
  const std::map<std::string, std::vector<int>> expected{
      {"C10", {1, 2}},         {"D5", {5, 2}},           {"C14", {1, 2}},          {"D7", {7, 2}},
      {"C21", {1, 4}},         {"C7:C3", {7, 16}},       {"C20", {1, 4, 2, 1, 2}}, {"C5:C4_4", {5, 12, 10, 5, 10}},
      {"C5:C4_2", {5, 20, 2, 5, 2}}, {"C5xC2xC2", {3, 0, 6, 1, 6}}, {"C5:(C2xC2)", {15, 0, 22, 5, 22}}};
  for (auto [p, m] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{7, 3}, std::pair{5, 4}})
    for (const auto& e : gamma_catalog(p, m)) {
      const auto r = r_matrix(Setting::make(left_regular(e.group), p));
      std::vector<int> got;
      int sum = 0;
      for (const auto& [label, c] : r.counts) {
        got.push_back(c);
        sum += c;
      }
      EXPECT_EQ(got, expected.at(e.label)) << e.label;
      EXPECT_EQ(r.total, sum);
    }
}

TEST(CheckInvariants, DetectsTampering) {
  const auto s = Setting::make(lambda_of("p=5,m=2,q=C2"), 5);
  auto recs = structured_enumerate(s);
  EXPECT_TRUE(check_invariants(s, recs).empty());
  auto bad = recs;
  bad.back().generators.pop_back();
  EXPECT_FALSE(check_invariants(s, bad).empty());
  auto missing = recs;
  missing.erase(std::remove_if(missing.begin(), missing.end(),
                               [&](const auto& r) { return r.elements == s.lambda.elements(); }),
                missing.end());
  const auto v = check_invariants(s, missing);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "lambda(Gamma) itself is missing");
}

// -- properties --------------------------------------------------------------

TEST(EnumeratorProperty, OracleEquivalenceAtSmallOrders) {
  for (auto [p, m] : kSmallOrders)
    for (const auto& e : gamma_catalog(p, m)) {
      const auto s = Setting::make(left_regular(e.group), p);
      const auto o = oracle_enumerate(s.lambda, p);
      const auto st = structured_enumerate(s);
      EXPECT_EQ(element_sets(o), element_sets(st)) << e.label;
      EXPECT_EQ(counts_of(o), counts_of(st)) << e.label;
      EXPECT_TRUE(check_invariants(s, o).empty()) << e.label;
      EXPECT_TRUE(check_invariants(s, st).empty()) << e.label;
    }
}

TEST(EnumeratorProperty, EveryOracleRecordSatisfiesTheProposition) {
  for (auto [p, m] : kSmallOrders)
    for (const auto& e : gamma_catalog(p, m)) {
      const auto s = Setting::make(left_regular(e.group), p);
      for (const auto& r : oracle_enumerate(s.lambda, p)) {
        ASSERT_TRUE(r.p_part.has_value());
        EXPECT_EQ(r.p_part->r, 0);
        EXPECT_TRUE(r.p_part->alpha.is_identity());
        for (int a : r.p_part->a) EXPECT_NE(a, 0);
        for (const auto& f : r.elements) ASSERT_TRUE(s.blocks.in_norm(f, s.alg));
      }
    }
}

TEST(EnumeratorProperty, ProjectionIsRegular) {
  for (auto [p, m] : {std::pair{3, 2}, std::pair{5, 4}, std::pair{7, 6}, std::pair{5, 8}})
    for (const auto& e : gamma_catalog(p, m)) {
      const auto R = block_projection(Setting::make(left_regular(e.group), p));
      EXPECT_TRUE(is_regular(R)) << e.label;
      for (const auto& b : R.elements())
        if (!b.is_identity()) EXPECT_FALSE(b.has_fixed_point());
    }
}

TEST(EnumeratorProperty, LambdaGammaAlwaysAppears) {
  for (auto [p, m] : {std::pair{5, 4}, std::pair{7, 6}})
    for (const auto& e : gamma_catalog(p, m)) {
      const auto s = Setting::make(left_regular(e.group), p);
      const auto r = r_matrix(s);
      for (const auto& [label, c] : r.counts)
        if (label == s.gamma_label) EXPECT_GE(c, 1);
    }
}

TEST(EnumeratorProperty, RelabelingPermutesRecords) {
  std::mt19937 rng(21);
  for (const auto& spec : {"p=5,m=2,q=C2,tau=[4]", "p=7,m=3,q=C3,tau=[2]", "p=5,m=4,q=C4,tau=[2]"}) {
    const auto L = lambda_of(spec);
    const int p = GammaSpec::parse(spec).p;
    std::vector<Point> img(L.degree());
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    const Perm sigma(img);
    const auto base = structured_enumerate(L, p);
    const auto moved = structured_enumerate(relabel(L, sigma), p);
    std::vector<std::vector<Perm>> expected;
    for (const auto& r : base) expected.push_back(relabel(r.elements, sigma));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(element_sets(moved), expected) << spec;
    EXPECT_EQ(counts_of(moved), counts_of(base)) << spec;
  }
}

TEST(EnumeratorProperty, DualDecompositionOfOrderSeventy) {
  StructuredOptions opt;
  opt.cap = 70;
  const GroupTable g5 = build_gamma(GammaSpec::parse("p=5,m=14,q=C14"));
  const GroupTable g7 = build_gamma(GammaSpec::parse("p=7,m=10,q=C10"));
  const auto phi = find_isomorphism(g5, g7);
  ASSERT_TRUE(phi.has_value());
  const Perm sigma = point_map(*phi);
  const auto r5 = structured_enumerate(left_regular(g5), 5, opt);
  const auto r7 = structured_enumerate(left_regular(g7), 7, opt);
  std::vector<std::vector<Perm>> moved;
  for (const auto& r : r5) moved.push_back(relabel(r.elements, sigma));
  std::sort(moved.begin(), moved.end());
  EXPECT_EQ(moved, element_sets(r7));
  EXPECT_EQ(r5.size(), 9u);
}
