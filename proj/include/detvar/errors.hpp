#pragma once

#include <stdexcept>
#include <string>

namespace detvar {

/// A caller broke a documented precondition (mismatched boxes, malformed data).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Parameters (m, n, k, ...) outside the range an operation is defined on.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Grassmannian box larger than the configured guardrail.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

/// Two independent evaluation routes disagreed. Never silently swallowed.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace detvar
