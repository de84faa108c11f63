#include "bspoly/core.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "bspoly/errors.h"

namespace bspoly {
namespace {

int CompareSign(const Integer& a, const Integer& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

}  // namespace

void RequireSameDim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

SignedVector::SignedVector(std::size_t dim) : entries_(dim, 0) {}

SignedVector::SignedVector(std::initializer_list<int> entries)
    : SignedVector(std::vector<int>(entries)) {}

SignedVector::SignedVector(const std::vector<int>& entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e < -1 || e > 1) {
      throw std::invalid_argument("signed vector entry out of {-1,0,1}: " +
                                  std::to_string(e));
    }
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

SignedVector SignedVector::Unit(std::size_t dim, Coord u, int sign) {
  SignedVector x(dim);
  x.set(u, sign);
  return x;
}

void SignedVector::set(Coord u, int value) {
  if (value < -1 || value > 1) {
    throw std::invalid_argument("signed vector entry out of {-1,0,1}");
  }
  entries_.at(u) = static_cast<std::int8_t>(value);
}

bool SignedVector::is_zero() const {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

int SignedVector::norm1() const {
  int n = 0;
  for (auto e : entries_) n += e != 0;
  return n;
}

std::vector<Coord> SignedVector::support() const {
  std::vector<Coord> s;
  for (Coord u = 0; u < entries_.size(); ++u) {
    if (entries_[u] != 0) s.push_back(u);
  }
  return s;
}

std::vector<Coord> SignedVector::positive_support() const {
  std::vector<Coord> s;
  for (Coord u = 0; u < entries_.size(); ++u) {
    if (entries_[u] > 0) s.push_back(u);
  }
  return s;
}

std::vector<Coord> SignedVector::negative_support() const {
  std::vector<Coord> s;
  for (Coord u = 0; u < entries_.size(); ++u) {
    if (entries_[u] < 0) s.push_back(u);
  }
  return s;
}

SignedVector SignedVector::operator-() const {
  SignedVector r = *this;
  for (auto& e : r.entries_) e = static_cast<std::int8_t>(-e);
  return r;
}

std::size_t SignedVector::ternary_index() const {
  std::size_t index = 0;
  for (auto e : entries_) index = index * 3 + static_cast<std::size_t>(e + 1);
  return index;
}

SignedVector SignedVector::FromTernaryIndex(std::size_t dim,
                                            std::size_t index) {
  SignedVector x(dim);
  for (std::size_t k = dim; k-- > 0;) {
    x.entries_[k] = static_cast<std::int8_t>(static_cast<int>(index % 3) - 1);
    index /= 3;
  }
  return x;
}

std::string SignedVector::ToString() const {
  std::string s = "(";
  for (std::size_t u = 0; u < entries_.size(); ++u) {
    if (u) s += ",";
    s += std::to_string(entries_[u]);
  }
  return s + ")";
}

bool IsStep(const SignedVector& x) {
  const int n = x.norm1();
  return n == 1 || n == 2;
}

IntPoint::IntPoint(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

IntPoint::IntPoint(const SignedVector& x) : coords_(x.dim()) {
  for (Coord u = 0; u < x.dim(); ++u) coords_[u] = x[u];
}

bool IntPoint::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Integer IntPoint::norm1() const {
  Integer n = 0;
  for (const auto& c : coords_) n += abs(c);
  return n;
}

std::vector<Coord> IntPoint::support() const {
  std::vector<Coord> s;
  for (Coord u = 0; u < coords_.size(); ++u) {
    if (sgn(coords_[u]) != 0) s.push_back(u);
  }
  return s;
}

IntPoint IntPoint::operator+(const IntPoint& other) const {
  RequireSameDim(dim(), other.dim());
  IntPoint r = *this;
  for (Coord u = 0; u < dim(); ++u) r.coords_[u] += other.coords_[u];
  return r;
}

IntPoint IntPoint::operator-(const IntPoint& other) const {
  RequireSameDim(dim(), other.dim());
  IntPoint r = *this;
  for (Coord u = 0; u < dim(); ++u) r.coords_[u] -= other.coords_[u];
  return r;
}

IntPoint IntPoint::operator+(const SignedVector& step) const {
  IntPoint r = *this;
  r += step;
  return r;
}

IntPoint& IntPoint::operator+=(const SignedVector& step) {
  RequireSameDim(dim(), step.dim());
  for (Coord u = 0; u < dim(); ++u) {
    if (step[u] > 0) {
      ++coords_[u];
    } else if (step[u] < 0) {
      --coords_[u];
    }
  }
  return *this;
}

std::string IntPoint::ToString() const {
  std::string s = "(";
  for (std::size_t u = 0; u < coords_.size(); ++u) {
    if (u) s += ",";
    s += coords_[u].get_str();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const IntPoint& a, const IntPoint& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t u = 0; u < n; ++u) {
    const int c = cmp(a.coords_[u], b.coords_[u]);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

Integer InnerProduct(const IntPoint& p, const SignedVector& x) {
  RequireSameDim(p.dim(), x.dim());
  Integer s = 0;
  for (Coord u = 0; u < p.dim(); ++u) {
    if (x[u] > 0) {
      s += p[u];
    } else if (x[u] < 0) {
      s -= p[u];
    }
  }
  return s;
}

Rational InnerProduct(const std::vector<Rational>& p, const SignedVector& x) {
  RequireSameDim(p.size(), x.dim());
  Rational s = 0;
  for (Coord u = 0; u < p.size(); ++u) {
    if (x[u] > 0) {
      s += p[u];
    } else if (x[u] < 0) {
      s -= p[u];
    }
  }
  return s;
}

SignedVector Meet(const SignedVector& x, const SignedVector& y) {
  RequireSameDim(x.dim(), y.dim());
  SignedVector r(x.dim());
  for (Coord u = 0; u < x.dim(); ++u) {
    if (x[u] == y[u]) r.set(u, x[u]);
  }
  return r;
}

SignedVector Join(const SignedVector& x, const SignedVector& y) {
  RequireSameDim(x.dim(), y.dim());
  SignedVector r(x.dim());
  for (Coord u = 0; u < x.dim(); ++u) {
    if (x[u] == y[u] || y[u] == 0) {
      r.set(u, x[u]);
    } else if (x[u] == 0) {
      r.set(u, y[u]);
    }
  }
  return r;
}

bool Precedes(const SignedVector& x, const SignedVector& y) {
  RequireSameDim(x.dim(), y.dim());
  for (Coord u = 0; u < x.dim(); ++u) {
    if (x[u] != 0 && x[u] != y[u]) return false;
  }
  return true;
}

std::vector<Step> PhiSteps(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<Step> steps;
  steps.reserve(2 * dim * dim);
  for (Coord u = 0; u < dim; ++u) {
    for (int su : {-1, 1}) {
      steps.push_back(SignedVector::Unit(dim, u, su));
      for (Coord v = u + 1; v < dim; ++v) {
        for (int sv : {-1, 1}) {
          SignedVector x = SignedVector::Unit(dim, u, su);
          x.set(v, sv);
          steps.push_back(std::move(x));
        }
      }
    }
  }
  std::sort(steps.begin(), steps.end());
  return steps;
}

bool MovesToward(const Step& alpha, const IntPoint& p, const IntPoint& q) {
  RequireSameDim(alpha.dim(), p.dim());
  RequireSameDim(p.dim(), q.dim());
  bool any = false;
  for (Coord u = 0; u < alpha.dim(); ++u) {
    if (alpha[u] == 0) continue;
    any = true;
    const int diff_sign = CompareSign(q[u], p[u]);
    if (alpha[u] * diff_sign <= 0) return false;
  }
  return any;
}

std::vector<Step> PhiToward(const IntPoint& p, const IntPoint& q) {
  RequireSameDim(p.dim(), q.dim());
  std::vector<Step> out;
  for (auto& alpha : PhiSteps(p.dim())) {
    if (!MovesToward(alpha, p, q)) continue;
#ifndef NDEBUG
    const IntPoint moved = p + alpha;
    assert((q - moved).norm1() == (q - p).norm1() - alpha.norm1());
#endif
    out.push_back(std::move(alpha));
  }
  return out;
}

Integer Violation(const IntPoint& r, const IntPoint& p, const IntPoint& q) {
  RequireSameDim(r.dim(), p.dim());
  RequireSameDim(p.dim(), q.dim());
  Integer v = 0;
  for (Coord u = 0; u < r.dim(); ++u) {
    if (sgn(r[u]) * CompareSign(q[u], p[u]) <= 0) v += abs(r[u]);
  }
  return v;
}

Integer Violation(const SignedVector& r, const IntPoint& p,
                  const IntPoint& q) {
  return Violation(IntPoint(r), p, q);
}

}  // namespace bspoly
