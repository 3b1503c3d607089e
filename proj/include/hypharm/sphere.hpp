#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hypharm/errors.hpp"

namespace hypharm {

inline constexpr double kUnitNormTol = 1e-12;

// Point on the unit sphere S^{n-1}, n >= 3. The constructor normalizes; a
// zero vector or a dimension below 3 is rejected.
class UnitVector {
 public:
  explicit UnitVector(std::vector<double> coords);
  static UnitVector axis(int n, int index);

  const std::vector<double>& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

// Strictly interior point of the unit ball B^n, n >= 3.
// Rejects |coords| >= 1 - 1e-15.
class BallPoint {
 public:
  explicit BallPoint(std::vector<double> coords);
  static BallPoint origin(int n);
  static BallPoint radial(double rho, const UnitVector& direction);

  const std::vector<double>& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double norm() const { return norm_; }
  double operator[](int i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
  double norm_;
};

double dot(const UnitVector& u, const UnitVector& v);
double dot(const BallPoint& x, const UnitVector& v);
double squared_distance(const BallPoint& x, const UnitVector& v);

enum class QuadratureMethod { ZonalGaussLegendre, MonteCarlo };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::ZonalGaussLegendre;
  int nodes = 200;          // Gauss-Legendre nodes, or Monte Carlo samples
  std::uint64_t seed = 0;   // Monte Carlo only

  static QuadratureSpec zonal(int nodes = 200);
  static QuadratureSpec monte_carlo(int samples, std::uint64_t seed);
  void validate() const;
};

// Deterministic stream of uniform draws on S^{n-1}: normalized standard
// Gaussian vectors via hand-rolled Box-Muller over mt19937_64, so the
// sequence is a pure function of (n, seed) on every platform.
class SphereSampler {
 public:
  SphereSampler(int n, std::uint64_t seed);
  void next(std::vector<double>& out);

 private:
  double normal();

  int n_;
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::vector<UnitVector> uniform_sphere_sample(int n, int count, std::uint64_t seed);

// omega_{n-2}/omega_{n-1} = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)),
// the zonal-reduction prefactor; equals 1 / int_0^pi sin^{n-2}.
double surface_ratio(int n);

// int_{S^{n-1}} g(<axis, eta>) dsigma(eta), reduced to the colatitude:
// surface_ratio(n) * int_0^pi g(cos theta) sin^{n-2}(theta) dtheta,
// by Gauss-Legendre in theta with the sine power folded into the integrand.
// Accepts n >= 2 (n = 2 serves azimuthal sub-integrals).
double zonal_integral(int n, const std::function<double(double)>& g, int nodes);

// Boundary Moebius transform T_x(eta) = x - (1-|x|^2)(eta-x)/|eta-x|^2,
// a self-map of S^{n-1}.
UnitVector mobius_boundary_map(const BallPoint& x, const UnitVector& eta);

// Jacobian of T_x against the normalized surface measure:
// (1-|x|^2)^{n-1} / |eta-x|^{2(n-1)}.
double mobius_jacobian(const BallPoint& x, const UnitVector& eta);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Sample mean and standard error of f over uniform_sphere_sample.
// Accumulation runs in fixed chunks of 4096 reduced in order, so the result
// is bit-reproducible for a given (n, samples, seed).
MonteCarloEstimate monte_carlo_surface_integral(
    const std::function<double(const UnitVector&)>& f, int n, const QuadratureSpec& spec);

struct MonteCarloVectorEstimate {
  std::vector<double> value;
  std::vector<double> std_error;
};

MonteCarloVectorEstimate monte_carlo_surface_integral_vec(
    const std::function<std::vector<double>(const UnitVector&)>& f, int dim, int n,
    const QuadratureSpec& spec);

}  // namespace hypharm
