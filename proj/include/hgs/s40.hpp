#pragma once

// The order-40 worked example: in S_40, pi_i = (1+5(i-1), ..., 5+5(i-1)) for
// i = 1..8, theta_j = (j, j+5, j+10, j+15, j+20) for j = 1..5 and
// theta_6,7,8 = pi_6,7,8. theta centralizes pi = pi_1...pi_8 and is
// fixed-point-free of order 5, yet theta_1..theta_5 are not powers of any pi_i.

#include <string>
#include <vector>

#include "hgs/perm.hpp"
#include "hgs/perm_group.hpp"
#include "hgs/wreath.hpp"

namespace hgs::s40 {

inline constexpr int kP = 5;
inline constexpr int kM = 8;
inline constexpr std::size_t kDegree = 40;

/// pi_i for i = 1..8.
inline Perm pi_factor(int i) {
  std::vector<Point> c;
  for (int t = 1; t <= 5; ++t) c.push_back(static_cast<Point>(t + (i - 1) * 5 - 1));
  return Perm::from_cycles(kDegree, {c});
}

/// theta_j for j = 1..8.
inline Perm theta_factor(int j) {
  if (j > 5) return pi_factor(j);
  std::vector<Point> c;
  for (int t = 0; t < 5; ++t) c.push_back(static_cast<Point>(j + 5 * t - 1));
  return Perm::from_cycles(kDegree, {c});
}

inline Perm pi() {
  Perm f(kDegree);
  for (int i = 1; i <= kM; ++i) f = f * pi_factor(i);
  return f;
}

inline Perm theta() {
  Perm f(kDegree);
  for (int j = 1; j <= kM; ++j) f = f * theta_factor(j);
  return f;
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs every assertion of the worked example against `theta_under_test`.
inline Report verify(const Perm& theta_under_test) {
  Report rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const Perm p = pi();
  const Perm& th = theta_under_test;
  const auto blocks = BlockSystem::from_generator(p, kP);
  const TripleAlgebra alg(kP, kM);

  add("pi and theta commute", p * th == th * p,
      "pi theta = " + (p * th).to_string() + ", theta pi = " + (th * p).to_string());
  add("pi has order 5", p.order() == 5, "order " + std::to_string(p.order()));
  add("theta has order 5", th.order() == 5, "order " + std::to_string(th.order()));

  const auto gen = closure({th});
  add("theta is fixed-point-free (with all its powers)", is_semiregular(gen) && gen.order() == 5,
      "cycle structure " + th.to_string());
  add("theta is not in V = <pi_1..pi_8>", !blocks.in_v(th, alg), "");

  std::string dividing;
  bool exact = true;
  for (int i = 0; i < kM; ++i) {
    const bool d = blocks.divides(i, th);
    if (d) dividing += (dividing.empty() ? "" : ",") + std::to_string(i + 1);
    exact = exact && (d == (i >= 5));
  }
  add("pi_i divides theta exactly for i in {6,7,8}", exact, "dividing blocks {" + dividing + "}");

  const auto t = blocks.to_triple(th, alg);
  bool shape = false;
  std::string tdetail = "not in Norm(P)";
  if (t) {
    const auto d = cycle_decompose(t->alpha);
    shape = t->r == 0 && d.cycles.size() == 1 && d.cycles[0].size() == 5 && d.fixed_points.size() == 3;
    tdetail = alg.to_string(*t);
  }
  add("theta has triple (a, 1, alpha) with alpha a 5-cycle fixing three blocks", shape, tdetail);

  const auto both = try_closure({p, th}, kDegree, 1000);
  bool abelian = both.has_value();
  if (both)
    for (const auto& x : both->elements())
      for (const auto& y : both->elements()) abelian = abelian && x * y == y * x;
  add("<pi, theta> is abelian of order 25", abelian && both->order() == 25,
      both ? "order " + std::to_string(both->order()) : "order exceeds 1000");
  return rep;
}

inline Report verify() { return verify(theta()); }

}  // namespace hgs::s40
