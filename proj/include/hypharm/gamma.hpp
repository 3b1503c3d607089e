#pragma once

namespace hypharm {

// Tolerance for deciding whether a floating value sits on an integer.
inline constexpr double kIntegerSnapTol = 1e-12;

bool is_integer_within_tol(double x, double tol = kIntegerSnapTol);
bool is_nonpositive_integer(double x, double tol = kIntegerSnapTol);

// log|Gamma(x)| together with the sign of Gamma(x).
// sign == 0 exactly at the poles (x a nonpositive integer).
struct SignedLogGamma {
  double log_abs;
  int sign;
};

SignedLogGamma log_gamma_signed(double x);

// Rising factorial a(a+1)...(a+k-1), with (a)_0 = 1. Total: never throws.
// Falls back to log-space accumulation with sign tracking if the running
// product overflows.
double pochhammer(double a, int k);

}  // namespace hypharm
