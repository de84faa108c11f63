#ifndef BSPOLY_DECOMPOSITION_H_
#define BSPOLY_DECOMPOSITION_H_

#include <vector>

#include "bspoly/core.h"

namespace bspoly {

struct StepCount {
  Step step;
  Integer multiplicity;

  friend bool operator==(const StepCount&, const StepCount&) = default;
};

// Multiset of steps in canonical form: sorted by step, positive
// multiplicities, no repeated step.
using StepMultiset = std::vector<StepCount>;

// Merges repeated steps, drops zero counts and sorts.
StepMultiset CanonicalMultiset(std::vector<StepCount> items);
// Sum of multiplicity * step.
IntPoint MultisetSum(const StepMultiset& steps, std::size_t dim);
Integer MultisetSize(const StepMultiset& steps);

// p + (sum of steps) / 2 = q.
struct Decomposition {
  IntPoint source;
  IntPoint target;
  StepMultiset steps;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class NoDecompositionReason { kInfeasible, kPositiveOptimum };

const char* ToString(NoDecompositionReason reason);

}  // namespace bspoly

#endif  // BSPOLY_DECOMPOSITION_H_
