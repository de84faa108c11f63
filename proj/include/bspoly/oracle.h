#ifndef BSPOLY_ORACLE_H_
#define BSPOLY_ORACLE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bspoly/bisubmod.h"
#include "bspoly/point_set.h"

namespace bspoly {

// f(x) = max over p in B of <p, x>; f(0) = 0.
BisubFunction SupportFunction(const PointSet& set);

struct OracleResult {
  enum class Failure { kNone, kNotBisubmodular, kRoundTripMismatch };

  bool bs_convex = false;
  BisubFunction function;
  Failure failure = Failure::kNone;
  std::optional<BisubmodularViolation> violation;
  // First point (lexicographic) in the symmetric difference of B and the
  // integer points of P(f).
  std::optional<IntPoint> mismatch;
};

// B is BS-convex iff its support function f is bisubmodular and the integer
// points of P(f) are exactly B.
OracleResult IsBsConvex(const PointSet& set);

// Deterministic pseudo-random integral bisubmodular table with values in
// [-value_range, value_range] and dim in 1..3. Throws RejectionBudgetExceeded
// when the search exceeds node_budget assignments.
BisubFunction RandomBisubmodular(std::size_t dim, long value_range,
                                 std::uint64_t seed,
                                 std::uint64_t node_budget = 1'000'000);

// Each point of [-box_radius, box_radius]^dim kept with probability density;
// redrawn until nonempty.
PointSet RandomPointSet(std::size_t dim, long box_radius, double density,
                        std::uint64_t seed);

struct VerdictTuple {
  bool delta_exc;
  bool bs_exc;
  bool oracle;
  bool jump;
  bool hole_free;

  std::string Key() const;
  friend bool operator==(const VerdictTuple&, const VerdictTuple&) = default;
};

struct Disagreement {
  std::size_t instance;
  std::vector<IntPoint> points;
  VerdictTuple verdicts;
  std::string kind;  // "equivalence", "delta-implies-jump", ...
};

struct EquivalenceReport {
  std::size_t total = 0;
  std::map<std::string, std::size_t> tuple_counts;
  std::vector<Disagreement> disagreements;
};

struct HarnessConfig {
  std::size_t dim = 1;
  // Exhaustive: every nonempty subset of {0, ..., range-1}^dim.
  bool exhaustive = false;
  long range = 0;
  // Randomized: count sets from RandomPointSet(dim, radius, density, seed+i).
  std::size_t count = 0;
  std::uint64_t seed = 0;
  long radius = 1;
  double density = 0.5;
};

// Instances enumerated by the config, in harness order.
std::vector<PointSet> HarnessInstances(const HarnessConfig& config);

VerdictTuple EvaluateInstance(const PointSet& set);

// Runs every checker on every instance and records verdict tuples, flagging
// disagreement among delta-exc, bs-exc and the oracle, and failures of the
// implications delta-exc => jump and delta-exc => hole-free.
EquivalenceReport RunEquivalenceHarness(const HarnessConfig& config);
EquivalenceReport RunEquivalenceHarness(const std::vector<PointSet>& instances);

}  // namespace bspoly

#endif  // BSPOLY_ORACLE_H_
