#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypharm/sphere.hpp"

namespace hypharm {

// Boundary data for the invariant Poisson integral. evaluate must be total on
// S^{n-1} and reentrant (the integrators may call it concurrently). Zonal
// data additionally carries the symmetry axis and the 1-D profile in
// t = <axis, eta>, which unlocks the zonal quadrature path.
struct BoundaryFunction {
  std::function<std::vector<double>(const UnitVector&)> evaluate;
  std::string label;
  int domain_dim = 0;    // n
  int codomain_dim = 1;  // 1 (scalar) or n (vector-valued)
  std::optional<UnitVector> zonal_axis;
  std::function<std::vector<double>(double)> zonal_profile;

  bool is_zonal() const { return zonal_axis.has_value() && static_cast<bool>(zonal_profile); }

  static BoundaryFunction constant(std::vector<double> value, int n, std::string label = "constant");
  static BoundaryFunction zonal_scalar(UnitVector axis, std::function<double(double)> profile,
                                       std::string label);
  static BoundaryFunction scalar(int n, std::function<double(const UnitVector&)> f,
                                 std::string label);
  static BoundaryFunction vector_valued(int n, int d,
                                        std::function<std::vector<double>(const UnitVector&)> f,
                                        std::string label);
};

// Poisson-Szego kernel ((1-|x|^2)/|x-zeta|^2)^{n-1}. Evaluated in log space
// beyond |x| = 0.99, where the power spans many orders of magnitude.
double poisson_szego(const BallPoint& x, const UnitVector& zeta);

struct PoissonIntegralResult {
  std::vector<double> value;
  double std_error = 0.0;  // 0 for the zonal path
  double magnitude() const;
};

// Invariant Poisson integral int P_h(x, zeta) phi(zeta) dsigma(zeta),
// componentwise. The zonal path requires phi to be zonal about an axis
// collinear with x (any axis when x = 0); otherwise MethodMismatch.
PoissonIntegralResult poisson_integral(const BoundaryFunction& phi, const BallPoint& x,
                                       const QuadratureSpec& spec);

// int P_h(x, zeta) dsigma(zeta); analytically 1 for every interior x.
double kernel_normalization(const BallPoint& x, const QuadratureSpec& spec);

// Central finite-difference estimate of
//   (1-|x|^2)^2 Lap u(x) + 2(n-2)(1-|x|^2) sum_i x_i du/dx_i(x).
// Requires the stencil to stay interior: |x| + 2h < 1.
double hyperbolic_laplacian_residual(const std::function<double(const BallPoint&)>& u,
                                     const BallPoint& x, double h);

}  // namespace hypharm
