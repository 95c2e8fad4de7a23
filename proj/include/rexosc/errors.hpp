#pragma once

#include <stdexcept>
#include <string>

namespace rexosc {

/// Coarse classification used by the command-line front end to pick an exit code.
enum class ErrorClass {
  validation = 1,  // bad input, violated precondition
  numerical = 2,   // non-convergence, overflow, indeterminate fits
  singular = 3,    // poles, degenerate transforms
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), class_(cls) {}
  ErrorClass error_class() const noexcept { return class_; }

 private:
  ErrorClass class_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorClass::validation, w) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& w) : Error(ErrorClass::validation, w) {}
};

/// Stencil or grid index too close to the edge of the sampled interval.
struct BoundaryError : Error {
  explicit BoundaryError(const std::string& w) : Error(ErrorClass::validation, w) {}
};

struct FlavorMismatchError : Error {
  explicit FlavorMismatchError(const std::string& w) : Error(ErrorClass::validation, w) {}
};

struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& w) : Error(ErrorClass::numerical, w) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string& w) : Error(ErrorClass::numerical, w) {}
};

struct IndeterminateError : Error {
  explicit IndeterminateError(const std::string& w) : Error(ErrorClass::numerical, w) {}
};

struct SingularityError : Error {
  explicit SingularityError(const std::string& w) : Error(ErrorClass::singular, w) {}
};

/// The coordinate map is undefined (zero discriminant, undefined coupling direction).
struct DegenerateTransformError : Error {
  explicit DegenerateTransformError(const std::string& w) : Error(ErrorClass::singular, w) {}
};

}  // namespace rexosc
