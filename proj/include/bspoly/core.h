#ifndef BSPOLY_CORE_H_
#define BSPOLY_CORE_H_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bspoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Coordinates are 0-based internally. Every serialized form uses 1-based
// coordinate numbers.
using Coord = std::size_t;

// An element of {-1, 0, +1}^dim. Ordered lexicographically with
// -1 < 0 < +1 and coordinate 0 most significant.
class SignedVector {
 public:
  SignedVector() = default;
  explicit SignedVector(std::size_t dim);
  SignedVector(std::initializer_list<int> entries);
  explicit SignedVector(const std::vector<int>& entries);

  static SignedVector Unit(std::size_t dim, Coord u, int sign = 1);

  std::size_t dim() const { return entries_.size(); }
  int operator[](Coord u) const { return entries_[u]; }
  void set(Coord u, int value);

  bool is_zero() const;
  int norm1() const;
  std::vector<Coord> support() const;
  std::vector<Coord> positive_support() const;
  std::vector<Coord> negative_support() const;

  SignedVector operator-() const;

  // Index in 0..3^dim-1 with digit (entry+1) in base 3, coordinate 0 most
  // significant; increasing index is increasing lexicographic order.
  std::size_t ternary_index() const;
  static SignedVector FromTernaryIndex(std::size_t dim, std::size_t index);

  std::string ToString() const;

  friend bool operator==(const SignedVector&, const SignedVector&) = default;
  friend auto operator<=>(const SignedVector&, const SignedVector&) = default;

 private:
  std::vector<std::int8_t> entries_;
};

// A step of 1-norm one or two: the elements of Phi.
using Step = SignedVector;

bool IsStep(const SignedVector& x);

// An element of Z^dim with arbitrary-precision entries.
class IntPoint {
 public:
  IntPoint() = default;
  explicit IntPoint(std::size_t dim) : coords_(dim) {}
  IntPoint(std::initializer_list<long> coords);
  explicit IntPoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  explicit IntPoint(const SignedVector& x);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](Coord u) const { return coords_[u]; }
  Integer& operator[](Coord u) { return coords_[u]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  Integer norm1() const;
  std::vector<Coord> support() const;

  IntPoint operator+(const IntPoint& other) const;
  IntPoint operator-(const IntPoint& other) const;
  IntPoint operator+(const SignedVector& step) const;
  IntPoint& operator+=(const SignedVector& step);

  std::string ToString() const;

  friend bool operator==(const IntPoint& a, const IntPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const IntPoint& a,
                                          const IntPoint& b);

 private:
  std::vector<Integer> coords_;
};

Integer InnerProduct(const IntPoint& p, const SignedVector& x);
Rational InnerProduct(const std::vector<Rational>& p, const SignedVector& x);

// Componentwise: x(u) where x(u) = y(u), else 0.
SignedVector Meet(const SignedVector& x, const SignedVector& y);
// Componentwise: x(u) if x(u) = y(u) or y(u) = 0; y(u) if x(u) = 0; 0 when
// the two signs conflict.
SignedVector Join(const SignedVector& x, const SignedVector& y);
// supp+(x) within supp+(y) and supp-(x) within supp-(y).
bool Precedes(const SignedVector& x, const SignedVector& y);

// All of Phi in lexicographic order; 2 * dim^2 elements.
std::vector<Step> PhiSteps(std::size_t dim);
// Steps whose every nonzero coordinate moves strictly toward q.
std::vector<Step> PhiToward(const IntPoint& p, const IntPoint& q);
bool MovesToward(const Step& alpha, const IntPoint& p, const IntPoint& q);

// Sum of |r(u)| over coordinates where r(u) * (q(u) - p(u)) <= 0.
Integer Violation(const IntPoint& r, const IntPoint& p, const IntPoint& q);
Integer Violation(const SignedVector& r, const IntPoint& p, const IntPoint& q);

void RequireSameDim(std::size_t a, std::size_t b);

}  // namespace bspoly

#endif  // BSPOLY_CORE_H_
