#include <random>

#include <gtest/gtest.h>

#include "bspoly/core.h"
#include "bspoly/errors.h"
#include "test_support.h"

namespace bspoly {
namespace {

using testing::AllSignedVectors;

TEST(SignedVectorTest, RejectsEntriesOutsideSigns) {
  EXPECT_THROW(SignedVector(std::vector<int>{0, 2}), std::invalid_argument);
  SignedVector x(2);
  EXPECT_THROW(x.set(0, -2), std::invalid_argument);
}

TEST(SignedVectorTest, TernaryIndexMatchesLexOrder) {
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    const auto all = AllSignedVectors(dim);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(all[i].ternary_index(), i);
      EXPECT_EQ(SignedVector::FromTernaryIndex(dim, i), all[i]);
      if (i > 0) EXPECT_LT(all[i - 1], all[i]);
    }
  }
}

TEST(MeetJoinTest, Examples) {
  EXPECT_EQ(Meet({1, 0}, {1, -1}), SignedVector({1, 0}));
  EXPECT_EQ(Meet({1, -1, 0}, {-1, -1, 1}), SignedVector({0, -1, 0}));
  EXPECT_EQ(Join({1, 0, -1}, {0, 1, 1}), SignedVector({1, 1, 0}));
  EXPECT_EQ(Join({1, 1}, {-1, 1}), SignedVector({0, 1}));
}

TEST(MeetJoinTest, LatticeLaws) {
  const auto all = AllSignedVectors(3);
  const SignedVector zero(3);
  for (const auto& x : all) {
    EXPECT_EQ(Meet(x, x), x);
    EXPECT_EQ(Join(x, zero), x);
    for (const auto& y : all) {
      EXPECT_EQ(Meet(x, y), Meet(y, x));
      EXPECT_EQ(Join(x, y), Join(y, x));
      EXPECT_TRUE(Precedes(Meet(x, y), x));
      EXPECT_TRUE(Precedes(Meet(x, y), y));
      for (const auto& z : all) {
        EXPECT_EQ(Meet(Meet(x, y), z), Meet(x, Meet(y, z)));
      }
    }
  }
}

TEST(PrecedesTest, Examples) {
  EXPECT_TRUE(Precedes({1, 0}, {1, -1}));
  EXPECT_FALSE(Precedes({1, 0}, {-1, 0}));
  for (const auto& y : AllSignedVectors(3)) {
    EXPECT_TRUE(Precedes(SignedVector(3), y));
  }
}

TEST(PhiStepsTest, SizesAndOrder) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto steps = PhiSteps(d);
    EXPECT_EQ(steps.size(), 2 * d * d);
    EXPECT_TRUE(std::is_sorted(steps.begin(), steps.end()));
    for (const auto& s : steps) EXPECT_TRUE(IsStep(s));
  }
  EXPECT_EQ(PhiSteps(1),
            (std::vector<Step>{SignedVector({-1}), SignedVector({1})}));
}

TEST(PhiTowardTest, Examples) {
  EXPECT_EQ(PhiToward({0, 0}, {1, 1}),
            (std::vector<Step>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(PhiToward({0, 0}, {2, 0}), (std::vector<Step>{{1, 0}}));
  EXPECT_TRUE(PhiToward({3, -1}, {3, -1}).empty());
}

TEST(PhiTowardTest, AgreesWithNormIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = 1 + rng() % 4;
    const IntPoint p = testing::RandomIntPoint(rng, dim, -2, 2);
    const IntPoint q = testing::RandomIntPoint(rng, dim, -2, 2);
    EXPECT_EQ(PhiToward(p, q), testing::NormIdentityToward(p, q));
  }
}

TEST(PhiTowardTest, RejectsDimensionMismatch) {
  EXPECT_THROW(PhiToward({0}, {0, 0}), DimensionMismatch);
}

TEST(ViolationTest, Examples) {
  EXPECT_EQ(Violation(SignedVector({1, 0}), {0, 0}, {2, 0}), 0);
  EXPECT_EQ(Violation(SignedVector({-1, 0}), {0, 0}, {2, 0}), 1);
  EXPECT_EQ(Violation(IntPoint{3, -2}, {1, 1}, {1, 1}), 5);
}

TEST(ViolationTest, ZeroExactlyOnStepsToward) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + rng() % 3;
    const IntPoint p = testing::RandomIntPoint(rng, dim, -2, 2);
    const IntPoint q = testing::RandomIntPoint(rng, dim, -2, 2);
    for (const auto& s : PhiSteps(dim)) {
      EXPECT_EQ(Violation(s, p, q) == 0, MovesToward(s, p, q));
    }
  }
}

// v(r) + v(r') > v(r + r') when some coordinate has r(u) r'(u) < 0, and
// equality otherwise.
TEST(ViolationTest, SubadditivityDichotomy) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t dim = 1 + rng() % 4;
    const IntPoint r = testing::RandomIntPoint(rng, dim, -3, 3);
    const IntPoint s = testing::RandomIntPoint(rng, dim, -3, 3);
    const IntPoint p = testing::RandomIntPoint(rng, dim, -3, 3);
    const IntPoint q = testing::RandomIntPoint(rng, dim, -3, 3);
    bool opposite = false;
    for (Coord u = 0; u < dim; ++u) opposite |= sgn(r[u]) * sgn(s[u]) < 0;
    const Integer lhs = Violation(r, p, q) + Violation(s, p, q);
    const Integer rhs = Violation(r + s, p, q);
    if (opposite) {
      EXPECT_GT(lhs, rhs);
    } else {
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(IntPointTest, OrderAndArithmetic) {
  EXPECT_LT(IntPoint({0, 5}), IntPoint({1, -5}));
  EXPECT_EQ(IntPoint({1, 2}) + SignedVector({-1, 1}), IntPoint({0, 3}));
  EXPECT_EQ(IntPoint({1, 2}) - IntPoint({1, 2}), IntPoint(2));
  IntPoint big{1};
  big[0] = Integer("123456789012345678901234567890");
  EXPECT_EQ((big + SignedVector({1}))[0],
            Integer("123456789012345678901234567891"));
}

}  // namespace
}  // namespace bspoly
