#pragma once

#include <stdexcept>
#include <string>

namespace edcs {

// Bad arguments: invalid (beta, beta_minus), mismatched inputs, out-of-range
// indices.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A documented precondition was violated by the caller (e.g. a matching
// passed as maximum that is not).
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

// Resource limits hit (iteration caps, realization retries exhausted).
// Never used to signal a wrong answer.
struct OperationalError : std::runtime_error {
  explicit OperationalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace edcs
