#include "hypharm/hypergeometric.hpp"

#include <cmath>

#include "hypharm/gamma.hpp"
#include "hypharm/quadrature.hpp"

namespace hypharm {

namespace {
constexpr double kSeriesRelTol = 1e-16;
constexpr int kSeriesTermCap = 100000;
}  // namespace

HypergeomParams::HypergeomParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("HypergeomParams: c must not be zero or a negative integer");
  }
}

bool HypergeomParams::terminating() const {
  return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

int HypergeomParams::terminating_degree() const {
  int degree = -1;
  if (is_nonpositive_integer(a)) degree = static_cast<int>(-std::round(a));
  if (is_nonpositive_integer(b)) {
    const int mb = static_cast<int>(-std::round(b));
    if (degree < 0 || mb < degree) degree = mb;
  }
  return degree;
}

double gauss_2f1_series(const HypergeomParams& p, double x) {
  const int degree = p.terminating_degree();
  if (degree >= 0) {
    // Snap the terminating parameter so the sum ends on an exact zero factor.
    const double a = is_nonpositive_integer(p.a) ? std::round(p.a) : p.a;
    const double b = is_nonpositive_integer(p.b) ? std::round(p.b) : p.b;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < degree; ++k) {
      term *= (a + k) * (b + k) / ((p.c + k) * (k + 1.0)) * x;
      sum += term;
    }
    return sum;
  }

  const double ax = std::abs(x);
  if (ax > 1.0 || (ax == 1.0 && !(p.c - p.a - p.b > 0.0))) {
    throw DomainError("gauss_2f1_series: outside the convergence domain");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= kSeriesRelTol * std::abs(sum)) return sum;
  }
  throw NoConvergence("gauss_2f1_series: term cap reached before the stopping rule");
}

double gauss_2f1_integral(const HypergeomParams& p, double x, int nodes) {
  if (!(p.c > p.b) || !(p.b > 0.0)) {
    throw DomainError("gauss_2f1_integral: requires c > b > 0");
  }
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("gauss_2f1_integral: requires |x| < 1");
  }
  if (nodes < 2) throw DomainError("gauss_2f1_integral: nodes must be >= 2");

  // Map [0,1] -> [-1,1]; the endpoint powers become the Jacobi weight
  // (1-s)^{c-b-1} (1+s)^{b-1} and the smooth factor (1-tx)^{-a} remains.
  const QuadratureRule rule = gauss_jacobi(nodes, p.c - p.b - 1.0, p.b - 1.0);
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = 0.5 * (1.0 + rule.nodes[i]);
    acc += rule.weights[i] * std::exp(-p.a * std::log1p(-t * x));
  }
  const double log_front = std::lgamma(p.c) - std::lgamma(p.b) - std::lgamma(p.c - p.b) +
                           (1.0 - p.c) * std::log(2.0);
  return std::exp(log_front) * acc;
}

double gauss_2f1_derivative(const HypergeomParams& p, double x) {
  const HypergeomParams shifted(p.a + 1.0, p.b + 1.0, p.c + 1.0);
  return p.a * p.b / p.c * gauss_2f1_series(shifted, x);
}

double gauss_2f1_at_one(const HypergeomParams& p) {
  const double d = p.c - p.a - p.b;
  if (!(d > 0.0)) {
    throw DomainError("gauss_2f1_at_one: requires c - a - b > 0");
  }
  const SignedLogGamma num1 = log_gamma_signed(p.c);
  const SignedLogGamma num2 = log_gamma_signed(d);
  const SignedLogGamma den1 = log_gamma_signed(p.c - p.a);
  const SignedLogGamma den2 = log_gamma_signed(p.c - p.b);
  if (num1.sign == 0 || num2.sign == 0 || den1.sign == 0 || den2.sign == 0) {
    throw DomainError("gauss_2f1_at_one: Gamma pole among c, c-a-b, c-a, c-b");
  }
  const double log_val = num1.log_abs + num2.log_abs - den1.log_abs - den2.log_abs;
  const int sign = num1.sign * num2.sign * den1.sign * den2.sign;
  return sign * std::exp(log_val);
}

}  // namespace hypharm
