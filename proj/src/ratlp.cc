#include "bspoly/ratlp.h"

#include <optional>
#include <stdexcept>

#include "bspoly/errors.h"

namespace bspoly {
namespace {

// Dense simplex tableau. Columns 0..n-1 are structural, n..n+m-1 are the
// phase-one artificials, and the last column holds the right-hand side.
class Tableau {
 public:
  Tableau(const StandardLP& lp)
      : m_(lp.rows()), n_(lp.cols()), width_(n_ + m_ + 1),
        rows_(m_, std::vector<Rational>(width_)), cost_(width_),
        basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = lp.b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
      }
      rows_[i][n_ + i] = 1;
      rows_[i][rhs()] = flip ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  // Sets the cost row to c - c_B B^-1 A for the given column costs.
  void Price(const std::vector<Rational>& costs) {
    for (std::size_t j = 0; j < width_; ++j) {
      cost_[j] = j < costs.size() ? costs[j] : Rational(0);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = basis_[i] < costs.size() ? costs[basis_[i]] : zero_;
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(rows_[i][j]) != 0) cost_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool Optimize(std::size_t allowed, int& pivots) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(cost_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& coef = rows_[i][*entering];
        if (sgn(coef) <= 0) continue;
        Rational ratio = rows_[i][rhs()] / coef;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      Pivot(*leaving, *entering);
      ++pivots;
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / rows_[row][col];
    for (auto& v : rows_[row]) {
      if (sgn(v) != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational factor = target[col];
      if (sgn(factor) == 0) return;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(rows_[row][j]) != 0) target[j] -= factor * rows_[row][j];
      }
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != row) eliminate(rows_[i]);
    }
    eliminate(cost_);
    basis_[row] = col;
  }

  // After phase one: pivot zero-level artificials out of the basis, dropping
  // rows that are linear combinations of the others.
  void EvictArtificials(int& pivots) {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        Pivot(i, *col);
        ++pivots;
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  Rational objective() const { return -cost_[rhs()]; }

  std::vector<Rational> Solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][rhs()];
    }
    return x;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  const Rational zero_ = 0;
};

}  // namespace

LpResult Solve(const StandardLP& lp) {
  if (lp.a.size() != lp.rows()) throw DimensionMismatch(lp.a.size(), lp.rows());
  for (const auto& row : lp.a) RequireSameDim(row.size(), lp.cols());

  LpResult result;
  Tableau tableau(lp);

  std::vector<Rational> phase_one(lp.cols() + lp.rows());
  for (std::size_t i = 0; i < lp.rows(); ++i) phase_one[lp.cols() + i] = 1;
  tableau.Price(phase_one);
  tableau.Optimize(lp.cols() + lp.rows(), result.pivots);
  if (sgn(tableau.objective()) != 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  tableau.EvictArtificials(result.pivots);
  tableau.Price(lp.c);
  if (!tableau.Optimize(lp.cols(), result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.solution = tableau.Solution();
  result.value = 0;
  for (std::size_t j = 0; j < lp.cols(); ++j) {
    result.value += lp.c[j] * result.solution[j];
  }
  return result;
}

HullMembership InConvexHull(const std::vector<IntPoint>& points,
                            const IntPoint& target) {
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t dim = target.dim();
  StandardLP lp;
  lp.a.assign(dim + 1, std::vector<Rational>(points.size()));
  lp.b.resize(dim + 1);
  lp.c.assign(points.size(), Rational(0));
  for (std::size_t j = 0; j < points.size(); ++j) {
    RequireSameDim(points[j].dim(), dim);
    for (Coord u = 0; u < dim; ++u) lp.a[u][j] = points[j][u];
    lp.a[dim][j] = 1;
  }
  for (Coord u = 0; u < dim; ++u) lp.b[u] = target[u];
  lp.b[dim] = 1;
  LpResult r = Solve(lp);
  HullMembership out;
  out.member = r.status == LpStatus::kOptimal;
  if (out.member) out.coefficients = std::move(r.solution);
  return out;
}

HullMembership InConicalHull(const std::vector<Step>& generators,
                             const IntPoint& target) {
  const std::size_t dim = target.dim();
  StandardLP lp;
  lp.a.assign(dim, std::vector<Rational>(generators.size()));
  lp.b.resize(dim);
  lp.c.assign(generators.size(), Rational(0));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    RequireSameDim(generators[j].dim(), dim);
    for (Coord u = 0; u < dim; ++u) lp.a[u][j] = generators[j][u];
  }
  for (Coord u = 0; u < dim; ++u) lp.b[u] = target[u];
  LpResult r = Solve(lp);
  HullMembership out;
  out.member = r.status == LpStatus::kOptimal;
  if (out.member) out.coefficients = std::move(r.solution);
  return out;
}

bool IsHalfIntegral(const Rational& x) {
  const auto& den = x.get_den();
  return den == 1 || den == 2;
}

}  // namespace bspoly
