#include "bspoly/json_io.h"

#include <fstream>
#include <sstream>

namespace bspoly {
namespace {

// "dim" may be omitted when the first point or entry shows it.
std::size_t ParseDim(const Json& doc, const char* list, const char* field) {
  if (!doc.contains("dim")) {
    if (doc.contains(list) && doc[list].is_array() && !doc[list].empty()) {
      Json first = doc[list][0];
      if (field) first = first.is_object() ? first.value(field, Json()) : Json();
      if (first.is_array() && !first.empty()) return first.size();
    }
    throw ParseError("\"dim\" is missing and cannot be inferred");
  }
  if (!doc["dim"].is_number_integer() ||
      doc["dim"].get<long long>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  return doc["dim"].get<std::size_t>();
}

Json RationalToJson(const Rational& r) {
  if (r.get_den() == 1) return IntegerToJson(r.get_num());
  return r.get_str();
}

}  // namespace

Json IntegerToJson(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Integer IntegerFromJson(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) {
      throw ParseError("not an integer: \"" + s + "\"");
    }
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

IntPoint PointFromJson(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw ParseError("expected a point of dimension " + std::to_string(dim) +
                     ", got " + j.dump());
  }
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(IntegerFromJson(c));
  return IntPoint(std::move(coords));
}

SignedVector SignedVectorFromJson(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw ParseError("expected a signed vector of dimension " +
                     std::to_string(dim) + ", got " + j.dump());
  }
  std::vector<int> entries;
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<long long>() < -1 ||
        c.get<long long>() > 1) {
      throw ParseError("signed vector entries must be -1, 0 or 1: " + j.dump());
    }
    entries.push_back(c.get<int>());
  }
  return SignedVector(entries);
}

Instance ParseInstance(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  const std::string kind = doc.value("kind", "set");
  if (kind == "set") {
    const std::size_t dim = ParseDim(doc, "points", nullptr);
    if (!doc.contains("points") || !doc["points"].is_array() ||
        doc["points"].empty()) {
      throw ParseError("\"points\" must be a nonempty array");
    }
    std::vector<IntPoint> points;
    for (const auto& p : doc["points"]) points.push_back(PointFromJson(p, dim));
    return PointSet(dim, std::move(points));
  }
  if (kind == "function") {
    const std::size_t dim = ParseDim(doc, "entries", "x");
    if (dim > BisubFunction::kMaxDim) {
      throw ParseError("function dimension above " +
                       std::to_string(BisubFunction::kMaxDim));
    }
    BisubFunction f(dim);
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
      throw ParseError("\"entries\" must be an array");
    }
    for (const auto& e : doc["entries"]) {
      if (!e.is_object() || !e.contains("x") || !e.contains("f")) {
        throw ParseError("each entry needs \"x\" and \"f\": " + e.dump());
      }
      const SignedVector x = SignedVectorFromJson(e["x"], dim);
      const Json& v = e["f"];
      ExtendedInt value = v.is_string() && v.get<std::string>() == "inf"
                              ? ExtendedInt::Infinity()
                              : ExtendedInt(IntegerFromJson(v));
      if (x.is_zero()) {
        if (!(value == ExtendedInt(0L))) throw ParseError("f(0) must be 0");
        continue;
      }
      f.set(x, std::move(value));
    }
    return f;
  }
  throw ParseError("unknown instance kind \"" + kind + "\"");
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return ParseInstance(doc);
}

Json ToJson(const IntPoint& p) {
  Json j = Json::array();
  for (const auto& c : p.coords()) j.push_back(IntegerToJson(c));
  return j;
}

Json ToJson(const SignedVector& x) {
  Json j = Json::array();
  for (Coord u = 0; u < x.dim(); ++u) j.push_back(x[u]);
  return j;
}

Json ToJson(const StepMultiset& steps) {
  Json j = Json::array();
  for (const auto& sc : steps) {
    j.push_back({{"step", ToJson(sc.step)},
                 {"mult", IntegerToJson(sc.multiplicity)}});
  }
  return j;
}

Json ToJson(const Decomposition& d) {
  return {{"p", ToJson(d.source)}, {"q", ToJson(d.target)},
          {"steps", ToJson(d.steps)}};
}

Json ToJson(const Verdict& v) {
  Json j;
  j["status"] = v.pass ? "PASS" : "FAIL";
  Json payload = std::visit(
      [](const auto& w) -> Json {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, ExchangeViolation>) {
          return {{"p", ToJson(w.p)}, {"q", ToJson(w.q)}, {"u", w.u + 1}};
        } else if constexpr (std::is_same_v<T, DecompositionFailure>) {
          return {{"p", ToJson(w.p)}, {"q", ToJson(w.q)},
                  {"reason", ToString(w.reason)}};
        } else if constexpr (std::is_same_v<T, Hole>) {
          Json coeffs = Json::array();
          for (const auto& c : w.coefficients) coeffs.push_back(RationalToJson(c));
          return {{"point", ToJson(w.point)}, {"coefficients", coeffs}};
        } else if constexpr (std::is_same_v<T, BisubmodularViolation>) {
          return {{"x", ToJson(w.x)}, {"y", ToJson(w.y)}};
        } else {
          Json list = Json::array();
          for (const auto& d : w.decompositions) list.push_back(ToJson(d));
          return {{"decompositions", list}};
        }
      },
      v.witness);
  if (!payload.is_null()) j[v.pass ? "certificate" : "witness"] = payload;
  return j;
}

Json ToJson(const BisubFunction& f) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    if (i == f.zero_index() || f.at_index(i).is_infinite()) continue;
    entries.push_back(
        {{"x", ToJson(SignedVector::FromTernaryIndex(f.dim(), i))},
         {"f", IntegerToJson(f.at_index(i).value())}});
  }
  return {{"kind", "function"}, {"dim", f.dim()}, {"entries", entries}};
}

Json ToJson(const OracleResult& r) {
  Json j;
  j["status"] = r.bs_convex ? "PASS" : "FAIL";
  if (r.bs_convex) {
    j["certificate"] = {{"function", ToJson(r.function)}};
    return j;
  }
  Json w;
  w["function"] = ToJson(r.function);
  if (r.violation) {
    w["failure"] = "not-bisubmodular";
    w["x"] = ToJson(r.violation->x);
    w["y"] = ToJson(r.violation->y);
  } else {
    w["failure"] = "round-trip-mismatch";
    w["point"] = ToJson(*r.mismatch);
  }
  j["witness"] = w;
  return j;
}

Json ToJson(const ZeroSumExchange& z) {
  return {{"alphas", ToJson(z.alphas)}, {"betas", ToJson(z.betas)}};
}

Json ToJson(const EquivalenceReport& report) {
  Json counts = Json::object();
  for (const auto& [key, n] : report.tuple_counts) counts[key] = n;
  Json list = Json::array();
  for (const auto& d : report.disagreements) {
    Json points = Json::array();
    for (const auto& p : d.points) points.push_back(ToJson(p));
    list.push_back({{"instance", d.instance},
                    {"kind", d.kind},
                    {"points", points},
                    {"verdicts", d.verdicts.Key()}});
  }
  return {{"total", report.total},
          {"tuple_counts", counts},
          {"disagreements", list}};
}

Json PointsToJson(std::size_t dim, const std::vector<IntPoint>& points) {
  Json list = Json::array();
  for (const auto& p : points) list.push_back(ToJson(p));
  return {{"kind", "set"}, {"dim", dim}, {"points", list}};
}

Decomposition DecompositionFromJson(const Json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") ||
      !j.contains("steps") || !j["steps"].is_array()) {
    throw ParseError("decomposition needs \"p\", \"q\" and \"steps\"");
  }
  std::vector<StepCount> steps;
  for (const auto& sc : j["steps"]) {
    if (!sc.is_object() || !sc.contains("step") || !sc.contains("mult")) {
      throw ParseError("each step needs \"step\" and \"mult\": " + sc.dump());
    }
    steps.push_back({SignedVectorFromJson(sc["step"], dim),
                     IntegerFromJson(sc["mult"])});
  }
  return {PointFromJson(j["p"], dim), PointFromJson(j["q"], dim),
          CanonicalMultiset(std::move(steps))};
}

Verdict VerdictFromJson(const Json& j, std::size_t dim) try {
  if (!j.is_object() || !j.contains("status")) {
    throw ParseError("verdict needs \"status\"");
  }
  const bool pass = j["status"] == "PASS";
  if (!pass && j["status"] != "FAIL") throw ParseError("bad verdict status");
  const char* key = pass ? "certificate" : "witness";
  if (!j.contains(key)) {
    if (pass) return Verdict::Pass();
    throw ParseError("FAIL verdict without witness");
  }
  const Json& w = j[key];
  if (!w.is_object()) throw ParseError("payload must be an object");
  if (w.contains("decompositions")) {
    DecompositionCertificate cert;
    for (const auto& d : w["decompositions"]) {
      cert.decompositions.push_back(DecompositionFromJson(d, dim));
    }
    return {pass, cert};
  }
  if (w.contains("u")) {
    const long u = w["u"].get<long>();
    if (u < 1 || static_cast<std::size_t>(u) > dim) {
      throw ParseError("coordinate out of range");
    }
    return {pass, ExchangeViolation{PointFromJson(w["p"], dim),
                                    PointFromJson(w["q"], dim),
                                    static_cast<Coord>(u - 1)}};
  }
  if (w.contains("reason")) {
    const std::string reason = w["reason"].get<std::string>();
    NoDecompositionReason r;
    if (reason == ToString(NoDecompositionReason::kInfeasible)) {
      r = NoDecompositionReason::kInfeasible;
    } else if (reason == ToString(NoDecompositionReason::kPositiveOptimum)) {
      r = NoDecompositionReason::kPositiveOptimum;
    } else {
      throw ParseError("unknown reason \"" + reason + "\"");
    }
    return {pass, DecompositionFailure{PointFromJson(w["p"], dim),
                                       PointFromJson(w["q"], dim), r}};
  }
  if (w.contains("point")) {
    Hole hole{PointFromJson(w["point"], dim), {}};
    for (const auto& c : w.value("coefficients", Json::array())) {
      Rational r;
      if (c.is_string()) {
        if (r.set_str(c.get<std::string>(), 10) != 0) {
          throw ParseError("bad rational " + c.dump());
        }
        r.canonicalize();
      } else {
        r = IntegerFromJson(c);
      }
      hole.coefficients.push_back(r);
    }
    return {pass, hole};
  }
  if (w.contains("x") && w.contains("y")) {
    return {pass, BisubmodularViolation{SignedVectorFromJson(w["x"], dim),
                                        SignedVectorFromJson(w["y"], dim)}};
  }
  throw ParseError("unrecognized verdict payload");
} catch (const Json::exception& e) {
  throw ParseError(e.what());
}

IntPoint ParsePointList(const std::string& text) {
  std::vector<Integer> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    const auto start = item.find_first_not_of(' ');
    if (start == std::string::npos || v.set_str(item.substr(start), 10) != 0) {
      throw ParseError("bad coordinate list \"" + text + "\"");
    }
    coords.push_back(std::move(v));
  }
  if (coords.empty()) throw ParseError("empty coordinate list");
  return IntPoint(std::move(coords));
}

}  // namespace bspoly
