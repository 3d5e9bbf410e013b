#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

/// Caller broke an API precondition (varset mismatch, unknown label, ...).
/// CLI exit code 2.
struct usage_error : std::invalid_argument {
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input data failed validation (bad graph file, malformed PD code, ...).
/// CLI exit code 3.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematically undefined request (breadth of zero, fractional t-power).
/// CLI exit code 3.
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sgt
