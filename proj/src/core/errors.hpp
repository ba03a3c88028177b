#pragma once

#include <stdexcept>
#include <string>

namespace sforge {

/// A computation hit one of the configured resource caps (degree bound,
/// pair count, matrix size). Never silently truncated: callers either
/// raise the cap or report the failure.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition failed (singular change of coordinates,
/// point off the variety, mismatched rings, malformed input...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Randomized sampling failed to produce an admissible object within the
/// retry budget, or an interpolation kernel failed to stabilize.
class SamplingError : public std::runtime_error {
public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sforge
