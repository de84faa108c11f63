#include "bspoly/bisubmod.h"

#include <stdexcept>

#include "bspoly/errors.h"

namespace bspoly {
namespace {

std::size_t Pow3(std::size_t dim) {
  std::size_t t = 1;
  for (std::size_t k = 0; k < dim; ++k) t *= 3;
  return t;
}

// Digit-wise meet and join on ternary indices (digit = entry + 1).
std::pair<std::size_t, std::size_t> MeetJoinIndex(std::size_t x, std::size_t y,
                                                  std::size_t dim) {
  std::size_t meet = 0, join = 0, scale = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    const int dx = static_cast<int>(x % 3) - 1;
    const int dy = static_cast<int>(y % 3) - 1;
    x /= 3;
    y /= 3;
    const int m = dx == dy ? dx : 0;
    int j = 0;
    if (dx == dy || dy == 0) {
      j = dx;
    } else if (dx == 0) {
      j = dy;
    }
    meet += static_cast<std::size_t>(m + 1) * scale;
    join += static_cast<std::size_t>(j + 1) * scale;
    scale *= 3;
  }
  return {meet, join};
}

struct Constraint {
  SignedVector x;
  Integer bound;
};

std::vector<Constraint> FiniteConstraints(const BisubFunction& f) {
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    if (i == f.zero_index() || f.at_index(i).is_infinite()) continue;
    out.push_back({SignedVector::FromTernaryIndex(f.dim(), i),
                   f.at_index(i).value()});
  }
  return out;
}

bool Satisfies(const std::vector<Constraint>& constraints, const IntPoint& p) {
  for (const auto& c : constraints) {
    if (InnerProduct(p, c.x) > c.bound) return false;
  }
  return true;
}

void RequireMember(const BisubFunction& f, const IntPoint& p) {
  RequireSameDim(f.dim(), p.dim());
  if (!PolyhedronContains(f, p)) {
    throw PointNotInPolyhedron("point " + p.ToString() +
                               " is not in the polyhedron");
  }
}

std::vector<SignedVector> TightVectors(const BisubFunction& f,
                                       const IntPoint& p) {
  std::vector<SignedVector> tight;
  for (const auto& c : FiniteConstraints(f)) {
    if (InnerProduct(p, c.x) == c.bound) tight.push_back(c.x);
  }
  return tight;
}

}  // namespace

BisubFunction::BisubFunction(std::size_t dim)
    : dim_(dim), zero_index_(0), table_() {
  if (dim == 0 || dim > kMaxDim) {
    throw std::invalid_argument("function dimension must be in 1.." +
                                std::to_string(kMaxDim));
  }
  table_.assign(Pow3(dim), ExtendedInt::Infinity());
  zero_index_ = SignedVector(dim).ternary_index();
  table_[zero_index_] = ExtendedInt(0L);
}

BisubFunction::BisubFunction(std::size_t dim, std::vector<ExtendedInt> table)
    : BisubFunction(dim) {
  if (table.size() != table_.size()) {
    throw std::invalid_argument("table must have 3^dim entries");
  }
  table_ = std::move(table);
  if (!(table_[zero_index_] == ExtendedInt(0L))) {
    throw std::invalid_argument("f(0) must be 0");
  }
}

const ExtendedInt& BisubFunction::operator()(const SignedVector& x) const {
  RequireSameDim(dim_, x.dim());
  return table_[x.ternary_index()];
}

void BisubFunction::set(const SignedVector& x, ExtendedInt value) {
  RequireSameDim(dim_, x.dim());
  const std::size_t i = x.ternary_index();
  if (i == zero_index_) {
    if (!(value == ExtendedInt(0L))) {
      throw std::invalid_argument("f(0) must be 0");
    }
    return;
  }
  table_[i] = std::move(value);
}

Verdict CheckBisubmodular(const BisubFunction& f) {
  const std::size_t n = f.table_size();
  for (std::size_t x = 0; x < n; ++x) {
    if (f.at_index(x).is_infinite()) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const ExtendedInt lhs = f.at_index(x) + f.at_index(y);
      if (lhs.is_infinite()) continue;
      const auto [m, j] = MeetJoinIndex(x, y, f.dim());
      const ExtendedInt rhs = f.at_index(m) + f.at_index(j);
      if (lhs < rhs) {
        return Verdict::Fail(BisubmodularViolation{
            SignedVector::FromTernaryIndex(f.dim(), x),
            SignedVector::FromTernaryIndex(f.dim(), y)});
      }
    }
  }
  return Verdict::Pass();
}

bool PolyhedronContains(const BisubFunction& f,
                        const std::vector<Rational>& p) {
  RequireSameDim(f.dim(), p.size());
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    if (i == f.zero_index() || f.at_index(i).is_infinite()) continue;
    const SignedVector x = SignedVector::FromTernaryIndex(f.dim(), i);
    if (InnerProduct(p, x) > Rational(f.at_index(i).value())) return false;
  }
  return true;
}

bool PolyhedronContains(const BisubFunction& f, const IntPoint& p) {
  RequireSameDim(f.dim(), p.dim());
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    if (i == f.zero_index() || f.at_index(i).is_infinite()) continue;
    const SignedVector x = SignedVector::FromTernaryIndex(f.dim(), i);
    if (InnerProduct(p, x) > f.at_index(i).value()) return false;
  }
  return true;
}

std::vector<IntPoint> EnumerateIntegerPoints(const BisubFunction& f,
                                             const std::optional<Box>& box) {
  const std::size_t dim = f.dim();
  IntPoint lower(dim), upper(dim);
  if (box) {
    RequireSameDim(dim, box->lower.dim());
    RequireSameDim(dim, box->upper.dim());
    lower = box->lower;
    upper = box->upper;
  } else {
    for (Coord u = 0; u < dim; ++u) {
      const ExtendedInt& up = f(SignedVector::Unit(dim, u, 1));
      const ExtendedInt& down = f(SignedVector::Unit(dim, u, -1));
      if (up.is_infinite() || down.is_infinite()) {
        throw UnboundedEnumeration(
            "singleton value at coordinate " + std::to_string(u + 1) +
            " is infinite; pass an explicit box");
      }
      upper[u] = up.value();
      lower[u] = -down.value();
    }
  }
  std::vector<IntPoint> out;
  for (Coord u = 0; u < dim; ++u) {
    if (lower[u] > upper[u]) return out;
  }
  const std::vector<Constraint> constraints = FiniteConstraints(f);
  // Odometer over the box; the last coordinate varies fastest, which yields
  // lexicographic order.
  IntPoint p = lower;
  for (;;) {
    if (Satisfies(constraints, p)) out.push_back(p);
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (p[k] < upper[k]) {
        ++p[k];
        break;
      }
      p[k] = lower[k];
      if (k == 0) return out;
    }
  }
}

DepVector Dep(const BisubFunction& f, const IntPoint& p, const Step& s) {
  RequireMember(f, p);
  RequireSameDim(f.dim(), s.dim());
  if (s.norm1() != 1) throw std::invalid_argument("dep needs a unit step");
  const Coord u = s.support().front();
  DepVector dep{SignedVector(f.dim()), true};
  for (const auto& x : TightVectors(f, p)) {
    if (x[u] != s[u]) continue;
    dep.vector = dep.empty_meet ? x : Meet(dep.vector, x);
    dep.empty_meet = false;
  }
  return dep;
}

std::vector<Step> FeasibleDirections(const BisubFunction& f,
                                     const IntPoint& p) {
  RequireMember(f, p);
  const std::vector<SignedVector> tight = TightVectors(f, p);
  std::vector<Step> out;
  for (auto& alpha : PhiSteps(f.dim())) {
    bool blocked = false;
    for (const auto& x : tight) {
      int dot = 0;
      for (Coord u = 0; u < f.dim(); ++u) dot += alpha[u] * x[u];
      if (dot > 0) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back(std::move(alpha));
  }
  return out;
}

}  // namespace bspoly
