#pragma once

#include <stdexcept>
#include <string>

namespace tfc {

/// Domain-rule violation: malformed value, unmet precondition, or an
/// operation asked to leave its representable class.
struct ForcingError : std::runtime_error {
  explicit ForcingError(const std::string& what) : std::runtime_error(what) {}
};

/// A dense-set callback broke its contract (result not below its input,
/// wrong stem, or a claimed relation fails on re-check).
struct OracleViolation : ForcingError {
  explicit OracleViolation(const std::string& what) : ForcingError(what) {}
};

}  // namespace tfc
