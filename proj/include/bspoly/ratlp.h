#ifndef BSPOLY_RATLP_H_
#define BSPOLY_RATLP_H_

#include <cstddef>
#include <vector>

#include "bspoly/core.h"

namespace bspoly {

// minimize c.mu subject to A mu = b, mu >= 0, all data exact rationals.
struct StandardLP {
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;
  std::vector<Rational> c;

  std::size_t rows() const { return b.size(); }
  std::size_t cols() const { return c.size(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  // Basic feasible solution and its objective value; set only when optimal.
  std::vector<Rational> solution;
  Rational value;
  int pivots = 0;
};

// Two-phase primal simplex with Bland's rule in both phases.
LpResult Solve(const StandardLP& lp);

struct HullMembership {
  bool member = false;
  std::vector<Rational> coefficients;  // one per input point or generator
};

// Is target a convex combination of points?
HullMembership InConvexHull(const std::vector<IntPoint>& points,
                            const IntPoint& target);
// Is target a nonnegative combination of the generators?
HullMembership InConicalHull(const std::vector<Step>& generators,
                             const IntPoint& target);

bool IsHalfIntegral(const Rational& x);

}  // namespace bspoly

#endif  // BSPOLY_RATLP_H_
