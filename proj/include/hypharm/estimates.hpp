#pragma once

#include "hypharm/kernel.hpp"
#include "hypharm/sphere.hpp"

namespace hypharm {

// Conjugate Hoelder exponents with 1/p + 1/q = 1. p lives in (1, inf]
// (inf representable), q in [1, inf); p = inf pairs with q = 1.
class ExponentPair {
 public:
  static ExponentPair from_p(double p);
  static ExponentPair from_q(double q);

  double p() const { return p_; }
  double q() const { return q_; }
  bool p_is_infinite() const;

 private:
  ExponentPair(double p, double q) : p_(p), q_(q) {}
  double p_;
  double q_;
};

struct SharpnessReport {
  BallPoint x;
  ExponentPair exponents;
  double lhs;               // |u_*(x)|
  double rhs;               // bound value
  double ratio;             // lhs / rhs
  double quadrature_error;  // relative discretization error estimate
};

// The sharp pointwise constant int |x - eta|^{2(n-1)(q-1)} dsigma(eta),
// by zonal reduction about x/|x| or by Monte Carlo sampling.
double cq_integral(double q, const BallPoint& x, const QuadratureSpec& spec);

// Closed form: 2F1(-(n-1)(q-1), n/2 + q - nq; n/2; |x|^2).
double cq_closed_form(double q, const BallPoint& x);

// sup over the ball, attained on the boundary:
// 2F1(-(n-1)(q-1), n/2 + q - nq; n/2; 1). q = 1 gives 1.
double cq_sup(double q, int n);

// n = 3 explicit form ((1+rho)^{4q-2} - (1-rho)^{4q-2}) / (4(2q-1) rho),
// with a series-in-rho branch below 1e-4 that avoids the cancellation,
// and the continuous value 1 at rho = 0.
double cq_n3_closed_form(double q, double rho);

// C_q(x)^{1/q} / (1-|x|^2)^{(n-1)/p}; identically 1 for p = inf.
double pointwise_bound(const ExponentPair& exponents, const BallPoint& x);

// Same with the sup constant in place of C_q(x).
double uniform_bound(const ExponentPair& exponents, const BallPoint& x);

// Extremal boundary data phi_*(zeta) = P_h(x, zeta)^{q-1}, scalar and zonal
// about x/|x| (any axis when x = 0).
BoundaryFunction extremal_boundary(const BallPoint& x, double q);

// (int |phi|^p dsigma)^{1/p} for finite p; sampled sup (>= 1e5 points) for
// p = inf. Zonal path needs zonal data, as in poisson_integral.
double lp_norm(const BoundaryFunction& phi, double p, const QuadratureSpec& spec);

// u_i(x0) for the normalized indicator of the cap {|zeta - eta0| <= 1/i}:
// the mean of P_h(x0, .) over the cap. Converges to P_h(x0, eta0).
double l1_extremal_sequence(const BallPoint& x0, const UnitVector& eta0, int i,
                            const QuadratureSpec& spec);

// Builds phi_*, evaluates both sides of the pointwise inequality, and
// reports the ratio; analytically the ratio is exactly 1.
SharpnessReport verify_sharpness(const ExponentPair& exponents, const BallPoint& x,
                                 const QuadratureSpec& spec);

}  // namespace hypharm
