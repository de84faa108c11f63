#ifndef BSPOLY_ERRORS_H_
#define BSPOLY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bspoly {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class PointNotInSet : public Error {
 public:
  using Error::Error;
};

class PointNotInPolyhedron : public Error {
 public:
  using Error::Error;
};

class UnboundedEnumeration : public Error {
 public:
  using Error::Error;
};

// Raised when an optimal simplex vertex that must be half-integral is not.
// This never describes the input; it signals a solver defect.
class HalfIntegralityViolated : public Error {
 public:
  using Error::Error;
};

class RejectionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bspoly

#endif  // BSPOLY_ERRORS_H_
