#ifndef BSPOLY_BISUBMOD_H_
#define BSPOLY_BISUBMOD_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bspoly/core.h"
#include "bspoly/verdict.h"

namespace bspoly {

// An integer or +infinity.
class ExtendedInt {
 public:
  ExtendedInt() : value_(0) {}
  ExtendedInt(Integer v) : value_(std::move(v)) {}  // NOLINT: implicit
  ExtendedInt(long v) : value_(Integer(v)) {}       // NOLINT: implicit
  static ExtendedInt Infinity() { return ExtendedInt(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Integer& value() const { return *value_; }

  std::string ToString() const { return value_ ? value_->get_str() : "inf"; }

  friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.is_infinite() || b.is_infinite()) return Infinity();
    return ExtendedInt(Integer(a.value() + b.value()));
  }
  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.value_ == b.value_;
  }
  // +infinity is the largest element.
  friend bool operator<(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.value() < b.value();
  }

 private:
  explicit ExtendedInt(std::nullopt_t) {}
  std::optional<Integer> value_;
};

// A total table {-1,0,1}^dim -> Z u {+inf} with f(0) = 0, stored densely and
// indexed by SignedVector::ternary_index().
class BisubFunction {
 public:
  static constexpr std::size_t kMaxDim = 10;

  // Every nonzero argument starts at +infinity.
  explicit BisubFunction(std::size_t dim);
  BisubFunction(std::size_t dim, std::vector<ExtendedInt> table);

  std::size_t dim() const { return dim_; }
  std::size_t table_size() const { return table_.size(); }
  const ExtendedInt& operator()(const SignedVector& x) const;
  const ExtendedInt& at_index(std::size_t index) const { return table_[index]; }
  void set(const SignedVector& x, ExtendedInt value);

  std::size_t zero_index() const { return zero_index_; }

  friend bool operator==(const BisubFunction&, const BisubFunction&) = default;

 private:
  std::size_t dim_;
  std::size_t zero_index_;
  std::vector<ExtendedInt> table_;
};

// PASS, or FAIL with the lexicographically first ordered pair (x, y) where
// f(x) + f(y) < f(x meet y) + f(x join y).
Verdict CheckBisubmodular(const BisubFunction& f);

bool PolyhedronContains(const BisubFunction& f, const std::vector<Rational>& p);
bool PolyhedronContains(const BisubFunction& f, const IntPoint& p);

struct Box {
  IntPoint lower;
  IntPoint upper;
};

// Integer points of P(f) in lexicographic order. Without a box, the box
// prod [-f(-chi_u), f(chi_u)] is used, which requires finite singleton values.
std::vector<IntPoint> EnumerateIntegerPoints(
    const BisubFunction& f, const std::optional<Box>& box = std::nullopt);

struct DepVector {
  SignedVector vector;
  bool empty_meet = true;
};

// Meet of the tight x (<p,x> = f(x)) whose signed support contains the unit
// step s. p must be an integer point of P(f).
DepVector Dep(const BisubFunction& f, const IntPoint& p, const Step& s);

// Steps alpha in Phi with <alpha, x> <= 0 for every tight nonzero x at p.
std::vector<Step> FeasibleDirections(const BisubFunction& f, const IntPoint& p);

}  // namespace bspoly

#endif  // BSPOLY_BISUBMOD_H_
