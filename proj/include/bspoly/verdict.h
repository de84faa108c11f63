#ifndef BSPOLY_VERDICT_H_
#define BSPOLY_VERDICT_H_

#include <variant>
#include <vector>

#include "bspoly/core.h"
#include "bspoly/decomposition.h"

namespace bspoly {

// No alpha in Phi_B(p, q) touches coordinate u (and, for the jump-system
// axiom, the two-step escape p + 2 s_u is unavailable too).
struct ExchangeViolation {
  IntPoint p;
  IntPoint q;
  Coord u;
  friend bool operator==(const ExchangeViolation&,
                         const ExchangeViolation&) = default;
};

struct DecompositionFailure {
  IntPoint p;
  IntPoint q;
  NoDecompositionReason reason;
  friend bool operator==(const DecompositionFailure&,
                         const DecompositionFailure&) = default;
};

// An integer point of conv(B) missing from B, with convex coefficients over
// the members of B (in set order) that reproduce it.
struct Hole {
  IntPoint point;
  std::vector<Rational> coefficients;
  friend bool operator==(const Hole&, const Hole&) = default;
};

struct BisubmodularViolation {
  SignedVector x;
  SignedVector y;
  friend bool operator==(const BisubmodularViolation&,
                         const BisubmodularViolation&) = default;
};

// One decomposition per ordered pair of distinct members, in pair order.
struct DecompositionCertificate {
  std::vector<Decomposition> decompositions;
  friend bool operator==(const DecompositionCertificate&,
                         const DecompositionCertificate&) = default;
};

using Witness = std::variant<std::monostate, ExchangeViolation,
                             DecompositionFailure, Hole, BisubmodularViolation,
                             DecompositionCertificate>;

struct Verdict {
  bool pass = true;
  Witness witness;

  static Verdict Pass(Witness certificate = {}) {
    return {true, std::move(certificate)};
  }
  static Verdict Fail(Witness witness) { return {false, std::move(witness)}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace bspoly

#endif  // BSPOLY_VERDICT_H_
