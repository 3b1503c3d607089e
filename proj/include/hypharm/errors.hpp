#pragma once

#include <stdexcept>

namespace hypharm {

// Input outside an operation's documented domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An iteration hit its hard cap before the stopping rule fired.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quadrature method was requested that the integrand does not support.
struct MethodMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypharm
