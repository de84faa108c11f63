#include <random>

#include <gtest/gtest.h>

#include "bspoly/ratlp.h"

namespace bspoly {
namespace {

StandardLP Lp(std::vector<std::vector<long>> a, std::vector<long> b,
              std::vector<long> c) {
  StandardLP lp;
  for (const auto& row : a) lp.a.emplace_back(row.begin(), row.end());
  lp.b.assign(b.begin(), b.end());
  lp.c.assign(c.begin(), c.end());
  return lp;
}

TEST(SolveTest, SingleEquality) {
  const LpResult r = Solve(Lp({{1}}, {2}, {0}));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.solution, std::vector<Rational>{2});
  EXPECT_EQ(r.value, 0);
}

TEST(SolveTest, Infeasible) {
  EXPECT_EQ(Solve(Lp({{1}}, {-1}, {0})).status, LpStatus::kInfeasible);
}

TEST(SolveTest, Unbounded) {
  EXPECT_EQ(Solve(Lp({{1, -1}}, {0}, {-1, 0})).status, LpStatus::kUnbounded);
}

TEST(SolveTest, RedundantRows) {
  const LpResult r = Solve(Lp({{1, 1}, {2, 2}}, {2, 4}, {1, 3}));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.solution, (std::vector<Rational>{2, 0}));
}

TEST(SolveTest, FractionalVertex) {
  const LpResult r = Solve(Lp({{2, 0}, {0, 3}}, {1, 1}, {1, 1}));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.solution, (std::vector<Rational>{Rational(1, 2), Rational(1, 3)}));
}

// Random systems over Phi columns with b = A mu0 for a known feasible mu0:
// the optimum is attained at a half-integral vertex, it is no worse than
// mu0, and perturbing along feasible directions never improves it.
TEST(SolveTest, PhiColumnVerticesAreHalfIntegral) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + rng() % 4;
    std::vector<Step> all = PhiSteps(dim);
    std::vector<Step> cols;
    for (const auto& s : all) {
      if (rng() % 2) cols.push_back(s);
    }
    if (cols.empty()) cols.push_back(all[0]);
    StandardLP lp;
    lp.a.assign(dim, std::vector<Rational>(cols.size()));
    lp.c.resize(cols.size());
    std::vector<Rational> mu0(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (Coord u = 0; u < dim; ++u) lp.a[u][j] = cols[j][u];
      lp.c[j] = static_cast<long>(rng() % 4);
      mu0[j] = static_cast<long>(rng() % 3);
    }
    lp.b.assign(dim, 0);
    for (Coord u = 0; u < dim; ++u) {
      for (std::size_t j = 0; j < cols.size(); ++j) lp.b[u] += lp.a[u][j] * mu0[j];
    }
    const LpResult r = Solve(lp);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    Rational value = 0, base = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      EXPECT_TRUE(IsHalfIntegral(r.solution[j]));
      EXPECT_GE(r.solution[j], 0);
      value += lp.c[j] * r.solution[j];
      base += lp.c[j] * mu0[j];
    }
    EXPECT_EQ(value, r.value);
    EXPECT_LE(r.value, base);
    for (Coord u = 0; u < dim; ++u) {
      Rational row = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        row += lp.a[u][j] * r.solution[j];
      }
      EXPECT_EQ(row, lp.b[u]);
    }
  }
}

TEST(HullTest, ConvexExamples) {
  const HullMembership mid = InConvexHull({{0}, {2}}, {1});
  ASSERT_TRUE(mid.member);
  EXPECT_EQ(mid.coefficients, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(InConvexHull({{0, 0}, {1, 1}}, {1, 0}).member);
  EXPECT_TRUE(InConvexHull({{0, 0}, {1, 1}}, {1, 1}).member);
  EXPECT_FALSE(InConvexHull({{0}, {2}}, {3}).member);
}

TEST(HullTest, MembersAndEvenMidpoints) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<IntPoint> pts;
    for (int k = 0; k < 4; ++k) {
      IntPoint p(dim);
      for (Coord u = 0; u < dim; ++u) p[u] = 2 * (static_cast<long>(rng() % 5) - 2);
      pts.push_back(p);
    }
    for (const auto& p : pts) EXPECT_TRUE(InConvexHull(pts, p).member);
    IntPoint mid(dim);
    for (Coord u = 0; u < dim; ++u) mid[u] = (pts[0][u] + pts[1][u]) / 2;
    EXPECT_TRUE(InConvexHull(pts, mid).member);
  }
}

TEST(HullTest, ConicalExamples) {
  EXPECT_TRUE(InConicalHull({{1, 1}}, {3, 3}).member);
  EXPECT_FALSE(InConicalHull({{1, 1}}, {1, 0}).member);
  EXPECT_TRUE(InConicalHull({}, IntPoint(2)).member);
  EXPECT_TRUE(InConicalHull({{1, -1}, {0, 1}}, {2, 0}).member);
}

}  // namespace
}  // namespace bspoly
