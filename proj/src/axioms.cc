#include "bspoly/axioms.h"

#include <stdexcept>

#include "axioms_internal.h"
#include "bspoly/exchange.h"
#include "bspoly/parallel.h"
#include "bspoly/ratlp.h"

namespace bspoly {
namespace internal {

std::optional<Coord> FirstUncovered(const PointSet& set, const IntPoint& p,
                                    const IntPoint& q, bool jump_system) {
  const std::vector<Step> toward = PhiBToward(set, p, q);
  for (Coord u : (q - p).support()) {
    bool covered = false;
    for (const auto& alpha : toward) {
      if (alpha[u] != 0) {
        covered = true;
        break;
      }
    }
    if (!covered && jump_system) {
      const int sign = q[u] > p[u] ? 1 : -1;
      if (abs(q[u] - p[u]) >= 2) {
        IntPoint two_step = p;
        two_step[u] += 2 * sign;
        covered = set.contains(two_step);
      }
    }
    if (!covered) return u;
  }
  return std::nullopt;
}

BoxGrid::BoxGrid(const PointSet& set) : lower_(set.lower_corner()) {
  const IntPoint upper = set.upper_corner();
  Integer total = 1;
  for (Coord u = 0; u < set.dim(); ++u) {
    const Integer width = upper[u] - lower_[u] + 1;
    total *= width;
    if (total > Integer(1UL << 32)) {
      throw std::invalid_argument("bounding box too large to scan");
    }
    extent_.push_back(width.get_ui());
  }
  size_ = total.get_ui();
}

IntPoint BoxGrid::At(std::size_t index) const {
  IntPoint p = lower_;
  for (std::size_t k = extent_.size(); k-- > 0;) {
    p[k] += static_cast<unsigned long>(index % extent_[k]);
    index /= extent_[k];
  }
  return p;
}

}  // namespace internal

namespace {

Verdict CheckExchange(const PointSet& set, bool jump_system) {
  const std::size_t n = set.size();
  const auto failure = FirstFailure(n * n, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    return i != j &&
           internal::FirstUncovered(set, set[i], set[j], jump_system)
               .has_value();
  });
  if (!failure) return Verdict::Pass();
  const IntPoint& p = set[*failure / n];
  const IntPoint& q = set[*failure % n];
  return Verdict::Fail(ExchangeViolation{
      p, q, *internal::FirstUncovered(set, p, q, jump_system)});
}

}  // namespace

Verdict CheckDeltaExc(const PointSet& set) { return CheckExchange(set, false); }

Verdict CheckJumpSystem(const PointSet& set) { return CheckExchange(set, true); }

Verdict CheckBsExc(const PointSet& set) {
  const std::size_t n = set.size();
  std::vector<std::optional<DecomposeResult>> slots(n * n);
  const auto failure = FirstFailure(n * n, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    if (i == j) return false;
    slots[k] = Decompose(set, set[i], set[j]);
    return std::holds_alternative<NoDecomposition>(*slots[k]);
  });
  if (failure) {
    return Verdict::Fail(DecompositionFailure{
        set[*failure / n], set[*failure % n],
        std::get<NoDecomposition>(*slots[*failure]).reason});
  }
  DecompositionCertificate cert;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (slots[k]) {
      cert.decompositions.push_back(
          std::get<Decomposition>(std::move(*slots[k])));
    }
  }
  return Verdict::Pass(std::move(cert));
}

Verdict CheckHoleFree(const PointSet& set) {
  const internal::BoxGrid grid(set);
  const auto failure = FirstFailure(grid.size(), [&](std::size_t k) {
    const IntPoint candidate = grid.At(k);
    return !set.contains(candidate) &&
           InConvexHull(set.points(), candidate).member;
  });
  if (!failure) return Verdict::Pass();
  IntPoint hole = grid.At(*failure);
  HullMembership m = InConvexHull(set.points(), hole);
  return Verdict::Fail(Hole{std::move(hole), std::move(m.coefficients)});
}

bool ReverifyExchangeViolation(const PointSet& set, const ExchangeViolation& w,
                               bool jump_system) {
  if (!set.contains(w.p) || !set.contains(w.q)) return false;
  if (w.u >= set.dim() || w.p[w.u] == w.q[w.u]) return false;
  const Integer distance = (w.q - w.p).norm1();
  // Norm identity form of "alpha moves toward q", independent of the sign
  // test used by the checkers.
  for (const auto& alpha : PhiSteps(set.dim())) {
    if (alpha[w.u] == 0) continue;
    const IntPoint next = w.p + alpha;
    if ((w.q - next).norm1() == distance - alpha.norm1() &&
        set.contains(next)) {
      return false;
    }
  }
  if (jump_system && abs(w.q[w.u] - w.p[w.u]) >= 2) {
    IntPoint two_step = w.p;
    two_step[w.u] += w.q[w.u] > w.p[w.u] ? 2 : -2;
    if (set.contains(two_step)) return false;
  }
  return true;
}

bool ReverifyHole(const PointSet& set, const Hole& hole) {
  if (set.contains(hole.point)) return false;
  if (hole.coefficients.size() != set.size()) return false;
  Rational total = 0;
  std::vector<Rational> combo(set.dim());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Rational& lambda = hole.coefficients[i];
    if (sgn(lambda) < 0) return false;
    total += lambda;
    for (Coord u = 0; u < set.dim(); ++u) combo[u] += lambda * set[i][u];
  }
  if (total != 1) return false;
  for (Coord u = 0; u < set.dim(); ++u) {
    if (combo[u] != hole.point[u]) return false;
  }
  return true;
}

}  // namespace bspoly
