#ifndef BSPOLY_AXIOMS_H_
#define BSPOLY_AXIOMS_H_

#include "bspoly/point_set.h"
#include "bspoly/verdict.h"

namespace bspoly {

// Every checker scans ordered pairs (p, q) of members in lexicographic order
// and, on FAIL, reports the first violation of that scan. These entry points
// evaluate pairs with OpenMP; the serial:: versions below are the reference
// scans and must return identical verdicts.

// For all p, q and u in supp(q - p), some alpha in PhiB(p, q) has u in
// supp(alpha). Witness: ExchangeViolation.
Verdict CheckDeltaExc(const PointSet& set);

// The two-step axiom: as above, or |q(u) - p(u)| >= 2 and p + 2 s_u in B.
// Witness: ExchangeViolation.
Verdict CheckJumpSystem(const PointSet& set);

// Every ordered pair decomposes as p + sum(alpha_i)/2 = q over PhiB(p, q).
// PASS carries a DecompositionCertificate; FAIL a DecompositionFailure.
Verdict CheckBsExc(const PointSet& set);

// Every integer point of the bounding box lying in conv(B) is in B.
// Witness: Hole.
Verdict CheckHoleFree(const PointSet& set);

namespace serial {

Verdict CheckDeltaExc(const PointSet& set);
Verdict CheckJumpSystem(const PointSet& set);
Verdict CheckBsExc(const PointSet& set);
Verdict CheckHoleFree(const PointSet& set);

}  // namespace serial

// Replays a FAIL witness against the definitions; true when it still shows a
// violation of the named axiom.
bool ReverifyExchangeViolation(const PointSet& set, const ExchangeViolation& w,
                               bool jump_system);
bool ReverifyHole(const PointSet& set, const Hole& hole);

}  // namespace bspoly

#endif  // BSPOLY_AXIOMS_H_
