#pragma once

#include <stdexcept>
#include <string>

namespace commvar {

/// Operands that cannot be combined (ring mismatch, wrong vector length).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A documented precondition was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The request is well formed but outside what this build supports
/// (unsupported series, size guards).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace commvar
