#pragma once

#include "hypharm/errors.hpp"

namespace hypharm {

// Parameter triple (a, b; c) of the Gauss hypergeometric series.
// c must be neither zero nor a negative integer (within kIntegerSnapTol).
struct HypergeomParams {
  double a;
  double b;
  double c;

  HypergeomParams(double a_, double b_, double c_);

  // True when a or b is a nonpositive integer: the series is a polynomial.
  bool terminating() const;
  // Degree of the terminating polynomial, or -1 when not terminating.
  int terminating_degree() const;
};

// Power series sum_k (a)_k (b)_k / (k! (c)_k) x^k.
//
// Terminating parameters give the exact finite sum (valid for any finite x);
// otherwise requires |x| < 1, or |x| = 1 with c - a - b > 0, and sums until
// the absolute term drops below 1e-16 * |partial sum|, hard cap 100000 terms.
double gauss_2f1_series(const HypergeomParams& p, double x);

// Euler integral representation
//   Gamma(c)/(Gamma(b) Gamma(c-b)) * int_0^1 t^{b-1} (1-t)^{c-b-1} (1-tx)^{-a} dt
// evaluated by Gauss-Jacobi quadrature with the endpoint exponents as the
// weight. Requires c > b > 0 and |x| < 1.
double gauss_2f1_integral(const HypergeomParams& p, double x, int nodes = 200);

// d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1, b+1; c+1; x).
double gauss_2f1_derivative(const HypergeomParams& p, double x);

// Value at x = 1: Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)),
// computed in log-Gamma space with sign tracking. Requires c - a - b > 0
// and no Gamma pole among c, c-a, c-b.
double gauss_2f1_at_one(const HypergeomParams& p);

}  // namespace hypharm
