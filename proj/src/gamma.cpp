#include "hypharm/gamma.hpp"

#include <cmath>
#include <limits>

namespace hypharm {

bool is_integer_within_tol(double x, double tol) {
  return std::abs(x - std::round(x)) <= tol;
}

bool is_nonpositive_integer(double x, double tol) {
  return x <= tol && is_integer_within_tol(x, tol);
}

SignedLogGamma log_gamma_signed(double x) {
  if (is_nonpositive_integer(x)) {
    return {std::numeric_limits<double>::infinity(), 0};
  }
  int sign = 1;
  if (x < 0.0) {
    // Gamma alternates sign on the intervals (-k-1, -k).
    const long long k = static_cast<long long>(std::floor(-x));
    sign = (k % 2 == 0) ? -1 : 1;
  }
  return {std::lgamma(x), sign};
}

double pochhammer(double a, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) {
    const double factor = a + i;
    if (factor == 0.0) return 0.0;
    acc *= factor;
    if (!std::isfinite(acc)) {
      double log_abs = 0.0;
      int sign = 1;
      for (int j = 0; j < k; ++j) {
        const double f = a + j;
        if (f == 0.0) return 0.0;
        log_abs += std::log(std::abs(f));
        if (f < 0.0) sign = -sign;
      }
      return sign * std::exp(log_abs);
    }
  }
  return acc;
}

}  // namespace hypharm
