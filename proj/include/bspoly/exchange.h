#ifndef BSPOLY_EXCHANGE_H_
#define BSPOLY_EXCHANGE_H_

#include <variant>
#include <vector>

#include "bspoly/core.h"
#include "bspoly/decomposition.h"
#include "bspoly/errors.h"
#include "bspoly/point_set.h"

namespace bspoly {

// Steps alpha in Phi with p + alpha in B. Requires p in B.
std::vector<Step> PhiB(const PointSet& set, const IntPoint& p);
// PhiB(set, p) restricted to steps moving toward q. Requires p, q in B.
std::vector<Step> PhiBToward(const PointSet& set, const IntPoint& p,
                             const IntPoint& q);

struct NoDecomposition {
  NoDecompositionReason reason;
};

using DecomposeResult = std::variant<Decomposition, NoDecomposition>;

// Solves  min sum v(alpha) mu_alpha  s.t.  sum mu_alpha alpha = q - p,
// mu >= 0  over alpha in PhiB(set, p), where v is the violation measured
// against (p, q). A zero optimum yields the half-integral vertex mu as the
// multiset alpha^(2 mu_alpha).
DecomposeResult Decompose(const PointSet& set, const IntPoint& p,
                          const IntPoint& q);

// True iff the decomposition lists steps of PhiB(set, source, target) that
// sum to 2 (target - source).
bool VerifyDecomposition(const PointSet& set, const Decomposition& d);

struct ZeroSumExchange {
  StepMultiset alphas;  // from PhiB(q, r)
  StepMultiset betas;   // from PhiB(r, q)
};

// Thrown when some u in supp(r - q) has no incident edge on one side: the
// delta-matroid exchange axiom fails at (from, to, u).
class ExchangeAxiomViolated : public Error {
 public:
  ExchangeAxiomViolated(IntPoint from, IntPoint to, Coord u);
  const IntPoint& from() const { return from_; }
  const IntPoint& to() const { return to_; }
  Coord coordinate() const { return u_; }

 private:
  IntPoint from_;
  IntPoint to_;
  Coord u_;
};

// Closed alternating walk over the edges supp(alpha), alpha in PhiB(q, r),
// and supp(beta), beta in PhiB(r, q), on the vertex set supp(r - q). Returns
// multisets with sum(alphas) + sum(betas) = 0. Requires q != r.
ZeroSumExchange ZeroSumExchangeFor(const PointSet& set, const IntPoint& q,
                                   const IntPoint& r);

bool VerifyZeroSumExchange(const PointSet& set, const IntPoint& q,
                           const IntPoint& r, const ZeroSumExchange& z);

}  // namespace bspoly

#endif  // BSPOLY_EXCHANGE_H_
