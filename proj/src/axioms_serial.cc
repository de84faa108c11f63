// Sequential reference scans for the axiom checkers.

#include "axioms_internal.h"
#include "bspoly/axioms.h"
#include "bspoly/exchange.h"
#include "bspoly/ratlp.h"

namespace bspoly::serial {
namespace {

Verdict CheckExchange(const PointSet& set, bool jump_system) {
  for (const auto& p : set) {
    for (const auto& q : set) {
      if (p == q) continue;
      if (auto u = internal::FirstUncovered(set, p, q, jump_system)) {
        return Verdict::Fail(ExchangeViolation{p, q, *u});
      }
    }
  }
  return Verdict::Pass();
}

}  // namespace

Verdict CheckDeltaExc(const PointSet& set) { return CheckExchange(set, false); }

Verdict CheckJumpSystem(const PointSet& set) { return CheckExchange(set, true); }

Verdict CheckBsExc(const PointSet& set) {
  DecompositionCertificate cert;
  for (const auto& p : set) {
    for (const auto& q : set) {
      if (p == q) continue;
      DecomposeResult r = Decompose(set, p, q);
      if (auto* none = std::get_if<NoDecomposition>(&r)) {
        return Verdict::Fail(DecompositionFailure{p, q, none->reason});
      }
      cert.decompositions.push_back(std::get<Decomposition>(std::move(r)));
    }
  }
  return Verdict::Pass(std::move(cert));
}

Verdict CheckHoleFree(const PointSet& set) {
  const internal::BoxGrid grid(set);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    IntPoint candidate = grid.At(k);
    if (set.contains(candidate)) continue;
    HullMembership m = InConvexHull(set.points(), candidate);
    if (m.member) {
      return Verdict::Fail(Hole{std::move(candidate), std::move(m.coefficients)});
    }
  }
  return Verdict::Pass();
}

}  // namespace bspoly::serial
