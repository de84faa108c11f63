#ifndef BSPOLY_JSON_IO_H_
#define BSPOLY_JSON_IO_H_

#include <string>
#include <variant>

#include "bspoly/bisubmod.h"
#include "bspoly/decomposition.h"
#include "bspoly/errors.h"
#include "bspoly/exchange.h"
#include "bspoly/oracle.h"
#include "bspoly/point_set.h"
#include "bspoly/verdict.h"
#include "json.hpp"

namespace bspoly {

using Json = nlohmann::json;

class ParseError : public Error {
 public:
  using Error::Error;
};

// {"kind":"set","dim":n,"points":[[...],...]} or
// {"kind":"function","dim":n,"entries":[{"x":[...],"f":int|"inf"},...]}.
// Unlisted nonzero x default to "inf"; the entry for x = 0 must be 0.
using Instance = std::variant<PointSet, BisubFunction>;

Instance ParseInstance(const Json& doc);
Instance LoadInstance(const std::string& path);

// Integers are JSON numbers when they fit in a signed 64-bit value and
// decimal strings otherwise; both forms are accepted on input.
Json IntegerToJson(const Integer& v);
Integer IntegerFromJson(const Json& j);
Json ToJson(const IntPoint& p);
Json ToJson(const SignedVector& x);
Json ToJson(const StepMultiset& steps);
Json ToJson(const Decomposition& d);
Json ToJson(const Verdict& v);
Json ToJson(const BisubFunction& f);
Json ToJson(const OracleResult& r);
Json ToJson(const ZeroSumExchange& z);
Json ToJson(const EquivalenceReport& report);
Json PointsToJson(std::size_t dim, const std::vector<IntPoint>& points);

IntPoint PointFromJson(const Json& j, std::size_t dim);
SignedVector SignedVectorFromJson(const Json& j, std::size_t dim);
// Inverses of ToJson for decompositions and axiom verdicts, so saved output
// can be re-verified against its instance.
Decomposition DecompositionFromJson(const Json& j, std::size_t dim);
Verdict VerdictFromJson(const Json& j, std::size_t dim);

// "1,-2,3" -> IntPoint.
IntPoint ParsePointList(const std::string& text);

}  // namespace bspoly

#endif  // BSPOLY_JSON_IO_H_
