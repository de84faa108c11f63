#include "bspoly/oracle.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "bspoly/axioms.h"
#include "bspoly/errors.h"
#include "bspoly/parallel.h"

namespace bspoly {
namespace {

// The generators below draw only raw 64-bit words from mt19937_64 (whose
// output sequence is fixed by the standard) so that seeded output is the
// same under every standard library.
double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void Shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

long FloorDiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long CeilDiv(long a, long b) { return -FloorDiv(-a, b); }

// sum coef * f(var) >= 0 over the nonzero table entries.
using LinearConstraint = std::vector<std::pair<std::size_t, long>>;

std::vector<LinearConstraint> BisubmodularConstraints(std::size_t dim) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < dim; ++k) n *= 3;
  const std::size_t zero = SignedVector(dim).ternary_index();
  std::vector<SignedVector> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    vectors.push_back(SignedVector::FromTernaryIndex(dim, i));
  }
  std::set<LinearConstraint> unique;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::map<std::size_t, long> coef;
      coef[x] += 1;
      coef[y] += 1;
      coef[Meet(vectors[x], vectors[y]).ternary_index()] -= 1;
      coef[Join(vectors[x], vectors[y]).ternary_index()] -= 1;
      LinearConstraint c;
      for (auto [var, a] : coef) {
        if (a != 0 && var != zero) c.emplace_back(var, a);
      }
      if (!c.empty()) unique.insert(std::move(c));
    }
  }
  return {unique.begin(), unique.end()};
}

class BoundsSearch {
 public:
  BoundsSearch(std::size_t dim, long range, std::uint64_t seed,
               std::uint64_t budget)
      : constraints_(BisubmodularConstraints(dim)), rng_(seed), budget_(budget) {
    std::size_t n = 1;
    for (std::size_t k = 0; k < dim; ++k) n *= 3;
    const std::size_t zero = SignedVector(dim).ternary_index();
    for (std::size_t i = 0; i < n; ++i) {
      if (i != zero) order_.push_back(i);
    }
    Shuffle(order_, rng_);
    lo_.assign(n, -range);
    hi_.assign(n, range);
    lo_[zero] = hi_[zero] = 0;
  }

  std::vector<long> Run() {
    if (!Search(lo_, hi_)) {
      throw RejectionBudgetExceeded("no bisubmodular table in range");
    }
    return result_;
  }

 private:
  // Tightens bounds to a fixpoint; false if some domain becomes empty.
  bool Propagate(std::vector<long>& lo, std::vector<long>& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : constraints_) {
        long slack = 0;  // max of sum a_j f_j over the box
        for (auto [var, a] : c) slack += a > 0 ? a * hi[var] : a * lo[var];
        for (auto [var, a] : c) {
          const long rest = slack - (a > 0 ? a * hi[var] : a * lo[var]);
          if (a > 0) {
            const long bound = CeilDiv(-rest, a);
            if (bound > lo[var]) {
              lo[var] = bound;
              changed = true;
            }
          } else {
            const long bound = FloorDiv(rest, -a);
            if (bound < hi[var]) {
              hi[var] = bound;
              changed = true;
            }
          }
          if (lo[var] > hi[var]) return false;
        }
      }
    }
    return true;
  }

  bool Search(std::vector<long> lo, std::vector<long> hi) {
    if (!Propagate(lo, hi)) return false;
    auto it = std::find_if(order_.begin(), order_.end(),
                           [&](std::size_t v) { return lo[v] < hi[v]; });
    if (it == order_.end()) {
      result_ = lo;
      return true;
    }
    const std::size_t var = *it;
    std::vector<long> values;
    for (long v = lo[var]; v <= hi[var]; ++v) values.push_back(v);
    Shuffle(values, rng_);
    for (long v : values) {
      if (++nodes_ > budget_) {
        throw RejectionBudgetExceeded("bisubmodular search exceeded budget");
      }
      lo[var] = hi[var] = v;
      if (Search(lo, hi)) return true;
    }
    return false;
  }

  std::vector<LinearConstraint> constraints_;
  std::mt19937_64 rng_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  std::vector<long> lo_, hi_, result_;
};

}  // namespace

BisubFunction SupportFunction(const PointSet& set) {
  BisubFunction f(set.dim());
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    if (i == f.zero_index()) continue;
    const SignedVector x = SignedVector::FromTernaryIndex(set.dim(), i);
    Integer best = InnerProduct(set[0], x);
    for (const auto& p : set) {
      Integer v = InnerProduct(p, x);
      if (v > best) best = std::move(v);
    }
    f.set(x, ExtendedInt(std::move(best)));
  }
  return f;
}

OracleResult IsBsConvex(const PointSet& set) {
  OracleResult result{.function = SupportFunction(set),
                      .violation = std::nullopt,
                      .mismatch = std::nullopt};
  const Verdict bisub = CheckBisubmodular(result.function);
  if (!bisub.pass) {
    result.failure = OracleResult::Failure::kNotBisubmodular;
    result.violation = std::get<BisubmodularViolation>(bisub.witness);
    return result;
  }
  const std::vector<IntPoint> points = EnumerateIntegerPoints(result.function);
  if (points != set.points()) {
    result.failure = OracleResult::Failure::kRoundTripMismatch;
    auto a = points.begin(), b = set.begin();
    while (a != points.end() && b != set.end() && *a == *b) {
      ++a;
      ++b;
    }
    if (a == points.end()) {
      result.mismatch = *b;
    } else if (b == set.end()) {
      result.mismatch = *a;
    } else {
      result.mismatch = std::min(*a, *b);
    }
    return result;
  }
  result.bs_convex = true;
  return result;
}

BisubFunction RandomBisubmodular(std::size_t dim, long value_range,
                                 std::uint64_t seed,
                                 std::uint64_t node_budget) {
  if (dim < 1 || dim > 3) {
    throw std::invalid_argument("random bisubmodular dim must be 1..3");
  }
  if (value_range < 0 || value_range > 1'000'000) {
    throw std::invalid_argument("value range must be in 0..1000000");
  }
  const std::vector<long> table =
      BoundsSearch(dim, value_range, seed, node_budget).Run();
  std::vector<ExtendedInt> values;
  values.reserve(table.size());
  for (long v : table) values.emplace_back(v);
  return BisubFunction(dim, std::move(values));
}

PointSet RandomPointSet(std::size_t dim, long box_radius, double density,
                        std::uint64_t seed) {
  if (dim < 1 || box_radius < 0 || !(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("invalid random point set parameters");
  }
  std::mt19937_64 rng(seed);
  const long width = 2 * box_radius + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    total *= static_cast<std::size_t>(width);
    if (total > (1u << 24)) throw std::invalid_argument("box too large");
  }
  for (;;) {
    std::vector<IntPoint> points;
    for (std::size_t index = 0; index < total; ++index) {
      if (UniformUnit(rng) >= density) continue;
      IntPoint p(dim);
      std::size_t rest = index;
      for (std::size_t k = dim; k-- > 0;) {
        p[k] = static_cast<long>(rest % static_cast<std::size_t>(width)) -
               box_radius;
        rest /= static_cast<std::size_t>(width);
      }
      points.push_back(std::move(p));
    }
    if (!points.empty()) return PointSet(dim, std::move(points));
  }
}

std::string VerdictTuple::Key() const {
  auto mark = [](bool b) { return b ? "P" : "F"; };
  return std::string("delta=") + mark(delta_exc) + ",bs=" + mark(bs_exc) +
         ",oracle=" + mark(oracle) + ",jump=" + mark(jump) +
         ",hole=" + mark(hole_free);
}

std::vector<PointSet> HarnessInstances(const HarnessConfig& config) {
  std::vector<PointSet> instances;
  if (config.dim < 1) throw std::invalid_argument("dim must be positive");
  if (config.exhaustive) {
    if (config.range < 1) throw std::invalid_argument("range must be positive");
    std::size_t grid = 1;
    for (std::size_t k = 0; k < config.dim; ++k) {
      grid *= static_cast<std::size_t>(config.range);
      if (grid > 20) {
        throw std::invalid_argument("exhaustive grid limited to 20 points");
      }
    }
    std::vector<IntPoint> cells;
    for (std::size_t index = 0; index < grid; ++index) {
      IntPoint p(config.dim);
      std::size_t rest = index;
      for (std::size_t k = config.dim; k-- > 0;) {
        p[k] = static_cast<long>(rest % static_cast<std::size_t>(config.range));
        rest /= static_cast<std::size_t>(config.range);
      }
      cells.push_back(std::move(p));
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << grid); ++mask) {
      std::vector<IntPoint> points;
      for (std::size_t b = 0; b < grid; ++b) {
        if (mask >> b & 1) points.push_back(cells[b]);
      }
      instances.emplace_back(config.dim, std::move(points));
    }
  }
  for (std::size_t i = 0; i < config.count; ++i) {
    instances.push_back(RandomPointSet(config.dim, config.radius,
                                       config.density, config.seed + i));
  }
  return instances;
}

VerdictTuple EvaluateInstance(const PointSet& set) {
  return {CheckDeltaExc(set).pass, CheckBsExc(set).pass,
          IsBsConvex(set).bs_convex, CheckJumpSystem(set).pass,
          CheckHoleFree(set).pass};
}

EquivalenceReport RunEquivalenceHarness(const std::vector<PointSet>& instances) {
  std::vector<VerdictTuple> tuples(instances.size());
  // Each instance writes its own slot; the report is assembled in instance
  // order afterwards.
  FirstFailure(instances.size(), [&](std::size_t i) {
    tuples[i] = EvaluateInstance(instances[i]);
    return false;
  });
  EquivalenceReport report;
  report.total = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const VerdictTuple& t = tuples[i];
    ++report.tuple_counts[t.Key()];
    auto flag = [&](const char* kind) {
      report.disagreements.push_back({i, instances[i].points(), t, kind});
    };
    if (t.delta_exc != t.bs_exc || t.delta_exc != t.oracle) flag("equivalence");
    if (t.delta_exc && !t.jump) flag("delta-implies-jump");
    if (t.delta_exc && !t.hole_free) flag("delta-implies-hole-free");
  }
  return report;
}

EquivalenceReport RunEquivalenceHarness(const HarnessConfig& config) {
  return RunEquivalenceHarness(HarnessInstances(config));
}

}  // namespace bspoly
