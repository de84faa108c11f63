#include <gtest/gtest.h>

#include "bspoly/axioms.h"
#include "bspoly/exchange.h"
#include "bspoly/oracle.h"
#include "bspoly/ratlp.h"
#include "test_support.h"

namespace bspoly {
namespace {

const PointSet kDiag(2, {{0, 0}, {1, 1}});
const PointSet kGap(1, {{0}, {2}});
const PointSet kWideGap(1, {{0}, {3}});
const PointSet kSingle(2, {{3, -4}});

// Definition of the exchange axioms, written out over all pairs.
bool BruteExchange(const PointSet& set, bool jump) {
  for (const auto& p : set) {
    for (const auto& q : set) {
      const auto steps = testing::BruteForcePhiBToward(set, p, q);
      for (Coord u : (q - p).support()) {
        bool ok = false;
        for (const auto& s : steps) ok |= s[u] != 0;
        if (!ok && jump && abs(q[u] - p[u]) >= 2) {
          IntPoint two = p;
          two[u] += sgn(q[u] - p[u]) * 2;
          ok = set.contains(two);
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

TEST(DeltaExcTest, Examples) {
  const Verdict gap = CheckDeltaExc(kGap);
  ASSERT_FALSE(gap.pass);
  EXPECT_EQ(std::get<ExchangeViolation>(gap.witness),
            (ExchangeViolation{{0}, {2}, 0}));
  EXPECT_TRUE(CheckDeltaExc(kDiag).pass);
  EXPECT_TRUE(CheckDeltaExc(kSingle).pass);
}

TEST(JumpSystemTest, Examples) {
  EXPECT_TRUE(CheckJumpSystem(kGap).pass);
  const Verdict wide = CheckJumpSystem(kWideGap);
  ASSERT_FALSE(wide.pass);
  EXPECT_EQ(std::get<ExchangeViolation>(wide.witness),
            (ExchangeViolation{{0}, {3}, 0}));
  EXPECT_TRUE(CheckJumpSystem(kDiag).pass);
}

TEST(BsExcTest, Examples) {
  const Verdict diag = CheckBsExc(kDiag);
  ASSERT_TRUE(diag.pass);
  const auto& cert = std::get<DecompositionCertificate>(diag.witness);
  ASSERT_EQ(cert.decompositions.size(), 2u);
  EXPECT_EQ(cert.decompositions[0],
            (Decomposition{{0, 0}, {1, 1}, {{SignedVector({1, 1}), 2}}}));

  const Verdict gap = CheckBsExc(kGap);
  ASSERT_FALSE(gap.pass);
  const auto& w = std::get<DecompositionFailure>(gap.witness);
  EXPECT_EQ(w.p, IntPoint({0}));
  EXPECT_EQ(w.q, IntPoint({2}));

  const Verdict single = CheckBsExc(kSingle);
  ASSERT_TRUE(single.pass);
  EXPECT_TRUE(std::get<DecompositionCertificate>(single.witness)
                  .decompositions.empty());
}

TEST(HoleFreeTest, Examples) {
  const Verdict gap = CheckHoleFree(kGap);
  ASSERT_FALSE(gap.pass);
  EXPECT_EQ(std::get<Hole>(gap.witness).point, IntPoint({1}));
  EXPECT_TRUE(CheckHoleFree(kDiag).pass);
  EXPECT_TRUE(CheckHoleFree(kSingle).pass);
}

TEST(AxiomsTest, AgreeWithDefinitionsAndWitnessesReplay) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const PointSet set = RandomPointSet(1 + seed % 3, 1 + seed % 2, 0.5, seed);
    const Verdict delta = CheckDeltaExc(set);
    const Verdict jump = CheckJumpSystem(set);
    EXPECT_EQ(delta.pass, BruteExchange(set, false)) << seed;
    EXPECT_EQ(jump.pass, BruteExchange(set, true)) << seed;
    if (!delta.pass) {
      EXPECT_TRUE(ReverifyExchangeViolation(
          set, std::get<ExchangeViolation>(delta.witness), false));
    }
    if (!jump.pass) {
      EXPECT_TRUE(ReverifyExchangeViolation(
          set, std::get<ExchangeViolation>(jump.witness), true));
    }
    const Verdict hole = CheckHoleFree(set);
    if (!hole.pass) {
      const Hole& h = std::get<Hole>(hole.witness);
      EXPECT_TRUE(ReverifyHole(set, h));
      EXPECT_FALSE(set.contains(h.point));
      EXPECT_TRUE(InConvexHull(set.points(), h.point).member);
    }
    const Verdict bs = CheckBsExc(set);
    if (!bs.pass) {
      const auto& w = std::get<DecompositionFailure>(bs.witness);
      EXPECT_TRUE(std::holds_alternative<NoDecomposition>(Decompose(set, w.p, w.q)));
    } else {
      for (const auto& d :
           std::get<DecompositionCertificate>(bs.witness).decompositions) {
        EXPECT_TRUE(VerifyDecomposition(set, d));
      }
    }
  }
}

TEST(AxiomsTest, Implications) {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const PointSet set = RandomPointSet(1 + seed % 3, 1, 0.6, seed);
    const bool delta = CheckDeltaExc(set).pass;
    const bool bs = CheckBsExc(set).pass;
    if (bs) EXPECT_TRUE(delta);
    if (delta) {
      EXPECT_TRUE(CheckJumpSystem(set).pass);
      EXPECT_TRUE(CheckHoleFree(set).pass);
    }
  }
}

TEST(ReverifyTest, RejectsNonViolations) {
  EXPECT_FALSE(ReverifyExchangeViolation(kDiag, {{0, 0}, {1, 1}, 0}, false));
  EXPECT_FALSE(ReverifyExchangeViolation(kGap, {{0}, {2}, 0}, true));
  EXPECT_FALSE(ReverifyHole(kGap, {{0}, {1, 0}}));
}

}  // namespace
}  // namespace bspoly
