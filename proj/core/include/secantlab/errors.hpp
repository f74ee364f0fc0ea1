#pragma once

#include <stdexcept>
#include <string>

namespace secantlab {

/// Violation of a structural precondition (ring mismatch, malformed input).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Violation of an operation contract (point off the variety, nonhomogeneous
/// input to a graded computation, ...).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace secantlab
