#include "bspoly/exchange.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "bspoly/ratlp.h"

namespace bspoly {
namespace {

void RequireInSet(const PointSet& set, const IntPoint& p) {
  RequireSameDim(set.dim(), p.dim());
  if (!set.contains(p)) {
    throw PointNotInSet("point " + p.ToString() + " is not in the set");
  }
}

struct Edge {
  std::vector<Coord> vertices;  // sorted; one entry for a self-loop
  Step step;
};

std::vector<Edge> EdgesFor(const std::vector<Step>& steps) {
  std::vector<Edge> edges;
  for (const auto& s : steps) edges.push_back({s.support(), s});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
  return edges;
}

// Smallest edge (by sorted vertex list) incident to each vertex.
std::map<Coord, std::size_t> FirstIncident(const std::vector<Edge>& edges) {
  std::map<Coord, std::size_t> first;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Coord v : edges[i].vertices) first.try_emplace(v, i);
  }
  return first;
}

Coord OtherEnd(const Edge& e, Coord v) {
  if (e.vertices.size() == 1) return v;
  return e.vertices[0] == v ? e.vertices[1] : e.vertices[0];
}

bool AllStepsIn(const StepMultiset& steps, const std::vector<Step>& allowed) {
  for (const auto& sc : steps) {
    if (sgn(sc.multiplicity) <= 0) return false;
    if (!std::binary_search(allowed.begin(), allowed.end(), sc.step)) {
      return false;
    }
  }
  return true;
}

}  // namespace

StepMultiset CanonicalMultiset(std::vector<StepCount> items) {
  std::sort(items.begin(), items.end(),
            [](const StepCount& a, const StepCount& b) { return a.step < b.step; });
  StepMultiset out;
  for (auto& item : items) {
    if (!out.empty() && out.back().step == item.step) {
      out.back().multiplicity += item.multiplicity;
    } else {
      out.push_back(std::move(item));
    }
  }
  std::erase_if(out, [](const StepCount& s) { return sgn(s.multiplicity) == 0; });
  return out;
}

IntPoint MultisetSum(const StepMultiset& steps, std::size_t dim) {
  IntPoint sum(dim);
  for (const auto& sc : steps) {
    RequireSameDim(dim, sc.step.dim());
    for (Coord u = 0; u < dim; ++u) {
      if (sc.step[u] > 0) {
        sum[u] += sc.multiplicity;
      } else if (sc.step[u] < 0) {
        sum[u] -= sc.multiplicity;
      }
    }
  }
  return sum;
}

Integer MultisetSize(const StepMultiset& steps) {
  Integer n = 0;
  for (const auto& sc : steps) n += sc.multiplicity;
  return n;
}

const char* ToString(NoDecompositionReason reason) {
  switch (reason) {
    case NoDecompositionReason::kInfeasible:
      return "infeasible";
    case NoDecompositionReason::kPositiveOptimum:
      return "positive-optimum";
  }
  return "unknown";
}

std::vector<Step> PhiB(const PointSet& set, const IntPoint& p) {
  RequireInSet(set, p);
  std::vector<Step> out;
  for (auto& alpha : PhiSteps(set.dim())) {
    if (set.contains(p + alpha)) out.push_back(std::move(alpha));
  }
  return out;
}

std::vector<Step> PhiBToward(const PointSet& set, const IntPoint& p,
                             const IntPoint& q) {
  RequireInSet(set, p);
  RequireInSet(set, q);
  std::vector<Step> out;
  for (auto& alpha : PhiSteps(set.dim())) {
    if (MovesToward(alpha, p, q) && set.contains(p + alpha)) {
      out.push_back(std::move(alpha));
    }
  }
  return out;
}

DecomposeResult Decompose(const PointSet& set, const IntPoint& p,
                          const IntPoint& q) {
  RequireInSet(set, p);
  RequireInSet(set, q);
  if (p == q) return Decomposition{p, q, {}};

  const std::vector<Step> columns = PhiB(set, p);
  const std::size_t dim = set.dim();
  StandardLP lp;
  lp.a.assign(dim, std::vector<Rational>(columns.size()));
  lp.b.resize(dim);
  lp.c.resize(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (Coord u = 0; u < dim; ++u) lp.a[u][j] = columns[j][u];
    lp.c[j] = Violation(columns[j], p, q);
  }
  for (Coord u = 0; u < dim; ++u) lp.b[u] = q[u] - p[u];

  const LpResult result = Solve(lp);
  if (result.status != LpStatus::kOptimal) {
    // The objective is nonnegative, so the LP is never unbounded.
    return NoDecomposition{NoDecompositionReason::kInfeasible};
  }
  for (const auto& mu : result.solution) {
    if (!IsHalfIntegral(mu)) {
      throw HalfIntegralityViolated("non-half-integral vertex coordinate " +
                                    mu.get_str() + " for pair " +
                                    p.ToString() + " -> " + q.ToString());
    }
  }
  if (sgn(result.value) != 0) {
    return NoDecomposition{NoDecompositionReason::kPositiveOptimum};
  }
  Decomposition d{p, q, {}};
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Rational twice = 2 * result.solution[j];
    if (sgn(twice) < 0 || twice.get_den() != 1) {
      throw HalfIntegralityViolated("invalid multiplicity " + twice.get_str());
    }
    if (sgn(twice) > 0) d.steps.push_back({columns[j], twice.get_num()});
  }
  return d;
}

bool VerifyDecomposition(const PointSet& set, const Decomposition& d) {
  if (!set.contains(d.source) || !set.contains(d.target)) return false;
  const std::vector<Step> allowed = PhiBToward(set, d.source, d.target);
  if (!AllStepsIn(d.steps, allowed)) return false;
  const IntPoint diff = d.target - d.source;
  const IntPoint sum = MultisetSum(d.steps, set.dim());
  for (Coord u = 0; u < set.dim(); ++u) {
    if (sum[u] != 2 * diff[u]) return false;
  }
  return true;
}

ExchangeAxiomViolated::ExchangeAxiomViolated(IntPoint from, IntPoint to,
                                             Coord u)
    : Error("exchange axiom fails at " + from.ToString() + " -> " +
            to.ToString() + ", coordinate " + std::to_string(u + 1)),
      from_(std::move(from)),
      to_(std::move(to)),
      u_(u) {}

ZeroSumExchange ZeroSumExchangeFor(const PointSet& set, const IntPoint& q,
                                   const IntPoint& r) {
  RequireInSet(set, q);
  RequireInSet(set, r);
  if (q == r) throw std::invalid_argument("zero-sum exchange needs q != r");

  // side 0: edges of PhiB(q, r); side 1: edges of PhiB(r, q).
  const std::vector<Edge> edges[2] = {EdgesFor(PhiBToward(set, q, r)),
                                      EdgesFor(PhiBToward(set, r, q))};
  const std::map<Coord, std::size_t> first[2] = {FirstIncident(edges[0]),
                                                 FirstIncident(edges[1])};
  for (Coord u : (r - q).support()) {
    if (!first[0].contains(u)) throw ExchangeAxiomViolated(q, r, u);
    if (!first[1].contains(u)) throw ExchangeAxiomViolated(r, q, u);
  }

  // A state is (side, edge, exit vertex); the next edge is the smallest edge
  // on the other side incident to the exit vertex.
  using State = std::tuple<int, std::size_t, Coord>;
  std::map<State, std::size_t> seen;
  std::vector<State> walk;
  State state{0, 0, edges[0][0].vertices.front()};
  while (!seen.contains(state)) {
    seen.emplace(state, walk.size());
    walk.push_back(state);
    const auto [side, edge, exit] = state;
    const int next_side = 1 - side;
    const std::size_t next_edge = first[next_side].at(exit);
    state = {next_side, next_edge, OtherEnd(edges[next_side][next_edge], exit)};
  }

  std::vector<StepCount> alphas, betas;
  for (std::size_t i = seen.at(state); i < walk.size(); ++i) {
    const auto [side, edge, exit] = walk[i];
    const Edge& e = edges[side][edge];
    const long weight = e.vertices.size() == 1 ? 2 : 1;
    (side == 0 ? alphas : betas).push_back({e.step, Integer(weight)});
  }
  return {CanonicalMultiset(std::move(alphas)),
          CanonicalMultiset(std::move(betas))};
}

bool VerifyZeroSumExchange(const PointSet& set, const IntPoint& q,
                           const IntPoint& r, const ZeroSumExchange& z) {
  if (z.alphas.empty() || z.betas.empty()) return false;
  if (!AllStepsIn(z.alphas, PhiBToward(set, q, r))) return false;
  if (!AllStepsIn(z.betas, PhiBToward(set, r, q))) return false;
  return (MultisetSum(z.alphas, set.dim()) + MultisetSum(z.betas, set.dim()))
      .is_zero();
}

}  // namespace bspoly
