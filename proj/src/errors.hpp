#ifndef IBSIM_ERRORS_HPP
#define IBSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ibsim {

/// Caller broke a precondition (dimension mismatch, non-Hermitian input,
/// non-invariant functional). Not recoverable by retrying with the same
/// arguments.
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

/// User-supplied parameters fail a model or config validity check.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Problem size exceeds a configured cap.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace ibsim

#endif
