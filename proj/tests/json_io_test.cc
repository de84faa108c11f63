#include <gtest/gtest.h>

#include "bspoly/axioms.h"
#include "bspoly/exchange.h"
#include "bspoly/json_io.h"
#include "bspoly/oracle.h"

namespace bspoly {
namespace {

TEST(ParseInstanceTest, Sets) {
  const Instance a = ParseInstance(Json::parse(R"({"points":[[2],[0],[2]]})"));
  EXPECT_EQ(std::get<PointSet>(a), PointSet(1, {{0}, {2}}));
  const Instance b = ParseInstance(
      Json::parse(R"({"kind":"set","dim":2,"points":[[1,"-99999999999999999999"]]})"));
  EXPECT_EQ(std::get<PointSet>(b)[0][1], Integer("-99999999999999999999"));
}

TEST(ParseInstanceTest, Functions) {
  const Instance inst = ParseInstance(Json::parse(
      R"({"kind":"function","dim":1,"entries":[{"x":[1],"f":1},{"x":[-1],"f":"inf"},{"x":[0],"f":0}]})"));
  const auto& f = std::get<BisubFunction>(inst);
  EXPECT_EQ(f({1}), ExtendedInt(1));
  EXPECT_TRUE(f({-1}).is_infinite());
  const Instance open = ParseInstance(Json::parse(R"({"kind":"function","dim":2,"entries":[]})"));
  EXPECT_TRUE(std::get<BisubFunction>(open)({1, 1}).is_infinite());
}

TEST(ParseInstanceTest, Errors) {
  for (const char* text : {
           R"([1,2])",
           R"({"points":[]})",
           R"({"dim":2,"points":[[1]]})",
           R"({"dim":0,"points":[[1]]})",
           R"({"kind":"cloud","dim":1,"points":[[1]]})",
           R"({"points":[[1.5]]})",
           R"({"points":[["x"]]})",
           R"({"kind":"function","dim":1,"entries":[{"x":[2],"f":1}]})",
           R"({"kind":"function","dim":1,"entries":[{"x":[0],"f":3}]})",
           R"({"kind":"function","dim":1,"entries":[{"x":[1]}]})",
           R"({"kind":"function","dim":1,"entries":[{"x":[1],"f":"big"}]})",
           R"({"kind":"function","entries":[]})",
       }) {
    EXPECT_THROW(ParseInstance(Json::parse(text)), ParseError) << text;
  }
}

TEST(JsonOutputTest, Shapes) {
  const PointSet gap(1, {{0}, {2}});
  EXPECT_EQ(ToJson(CheckDeltaExc(gap)),
            Json::parse(R"({"status":"FAIL","witness":{"p":[0],"q":[2],"u":1}})"));
  EXPECT_EQ(ToJson(CheckHoleFree(gap)),
            Json::parse(R"({"status":"FAIL","witness":{"point":[1],"coefficients":["1/2","1/2"]}})"));
  EXPECT_EQ(ToJson(CheckJumpSystem(gap)), Json::parse(R"({"status":"PASS"})"));
  EXPECT_EQ(IntegerToJson(Integer("123456789012345678901234")),
            Json("123456789012345678901234"));
  EXPECT_EQ(IntegerToJson(Integer(-5)), Json(-5));
}

TEST(JsonOutputTest, VerdictsRoundTripAndReverify) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PointSet set = RandomPointSet(1 + seed % 3, 1, 0.5, seed);
    const Json text = Json::parse(PointsToJson(set.dim(), set.points()).dump());
    const PointSet reread = std::get<PointSet>(ParseInstance(text));
    ASSERT_EQ(reread, set);

    const Verdict delta = CheckDeltaExc(set);
    const Verdict back = VerdictFromJson(Json::parse(ToJson(delta).dump()), set.dim());
    EXPECT_EQ(back, delta);
    if (!back.pass) {
      EXPECT_TRUE(ReverifyExchangeViolation(
          reread, std::get<ExchangeViolation>(back.witness), false));
    }
    const Verdict hole = CheckHoleFree(set);
    const Verdict hole_back = VerdictFromJson(Json::parse(ToJson(hole).dump()), set.dim());
    EXPECT_EQ(hole_back, hole);
    if (!hole_back.pass) {
      EXPECT_TRUE(ReverifyHole(reread, std::get<Hole>(hole_back.witness)));
    }
    const Verdict bs = CheckBsExc(set);
    const Verdict bs_back = VerdictFromJson(Json::parse(ToJson(bs).dump()), set.dim());
    EXPECT_EQ(bs_back, bs);
    if (bs_back.pass) {
      for (const auto& d : std::get<DecompositionCertificate>(bs_back.witness).decompositions) {
        EXPECT_TRUE(VerifyDecomposition(reread, d));
      }
    }
  }
}

TEST(JsonOutputTest, FunctionsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BisubFunction f = RandomBisubmodular(1 + seed % 3, 5, seed);
    EXPECT_EQ(std::get<BisubFunction>(ParseInstance(ToJson(f))), f);
  }
  BisubFunction g(2);
  g.set({1, 0}, ExtendedInt(Integer("99999999999999999999999")));
  EXPECT_EQ(std::get<BisubFunction>(ParseInstance(ToJson(g))), g);
}

TEST(ParsePointListTest, Forms) {
  EXPECT_EQ(ParsePointList("1,-2, 3"), IntPoint({1, -2, 3}));
  EXPECT_THROW(ParsePointList(""), ParseError);
  EXPECT_THROW(ParsePointList("1,,2"), ParseError);
  EXPECT_THROW(ParsePointList("a"), ParseError);
}

}  // namespace
}  // namespace bspoly
