#include "hypharm/kernel.hpp"

#include <cmath>
#include <utility>

#include "hypharm/quadrature.hpp"

namespace hypharm {

namespace {

// Tolerance for "axis collinear with x" when selecting the zonal path.
constexpr double kAxisAlignTol = 1e-9;

// Kernel profile in t = <x/|x|, zeta> for a point at radius rho; s is the
// signed radius relative to the zonal axis (+rho when the axis is x/|x|,
// -rho when it is -x/|x|).
double kernel_profile(double s, double rho, int n, double t) {
  const double d2 = 1.0 + rho * rho - 2.0 * s * t;
  if (rho > 0.99) {
    return std::exp((n - 1) * (std::log1p(-rho * rho) - std::log(d2)));
  }
  return std::pow((1.0 - rho * rho) / d2, n - 1);
}

}  // namespace

BoundaryFunction BoundaryFunction::constant(std::vector<double> value, int n, std::string label) {
  BoundaryFunction phi;
  phi.domain_dim = n;
  phi.codomain_dim = static_cast<int>(value.size());
  phi.label = std::move(label);
  phi.zonal_axis = UnitVector::axis(n, n - 1);
  phi.zonal_profile = [value](double) { return value; };
  phi.evaluate = [value](const UnitVector&) { return value; };
  return phi;
}

BoundaryFunction BoundaryFunction::zonal_scalar(UnitVector axis,
                                                std::function<double(double)> profile,
                                                std::string label) {
  BoundaryFunction phi;
  phi.domain_dim = axis.dim();
  phi.codomain_dim = 1;
  phi.label = std::move(label);
  phi.zonal_profile = [profile](double t) { return std::vector<double>{profile(t)}; };
  phi.evaluate = [axis, profile](const UnitVector& eta) {
    return std::vector<double>{profile(dot(eta, axis))};
  };
  phi.zonal_axis = std::move(axis);
  return phi;
}

BoundaryFunction BoundaryFunction::scalar(int n, std::function<double(const UnitVector&)> f,
                                          std::string label) {
  BoundaryFunction phi;
  phi.domain_dim = n;
  phi.codomain_dim = 1;
  phi.label = std::move(label);
  phi.evaluate = [f](const UnitVector& eta) { return std::vector<double>{f(eta)}; };
  return phi;
}

BoundaryFunction BoundaryFunction::vector_valued(
    int n, int d, std::function<std::vector<double>(const UnitVector&)> f, std::string label) {
  BoundaryFunction phi;
  phi.domain_dim = n;
  phi.codomain_dim = d;
  phi.label = std::move(label);
  phi.evaluate = std::move(f);
  return phi;
}

double poisson_szego(const BallPoint& x, const UnitVector& zeta) {
  if (x.dim() != zeta.dim()) throw DomainError("poisson_szego: dimension mismatch");
  const double r = x.norm();
  const double d2 = squared_distance(x, zeta);
  const int m = x.dim() - 1;
  if (r > 0.99) {
    return std::exp(m * (std::log1p(-r * r) - std::log(d2)));
  }
  return std::pow((1.0 - r * r) / d2, m);
}

double PoissonIntegralResult::magnitude() const {
  double acc = 0.0;
  for (double v : value) acc += v * v;
  return std::sqrt(acc);
}

PoissonIntegralResult poisson_integral(const BoundaryFunction& phi, const BallPoint& x,
                                       const QuadratureSpec& spec) {
  spec.validate();
  if (!phi.evaluate) throw DomainError("poisson_integral: boundary function has no evaluator");
  if (phi.domain_dim != x.dim()) throw DomainError("poisson_integral: dimension mismatch");
  const int n = x.dim();
  const int d = phi.codomain_dim;

  if (spec.method == QuadratureMethod::ZonalGaussLegendre) {
    if (!phi.is_zonal()) {
      throw MethodMismatch("poisson_integral: zonal quadrature requested for non-zonal data");
    }
    const double rho = x.norm();
    double signed_rho = 0.0;
    if (rho > 0.0) {
      signed_rho = dot(x, *phi.zonal_axis);
      if (std::abs(std::abs(signed_rho) / rho - 1.0) > kAxisAlignTol) {
        throw MethodMismatch("poisson_integral: zonal axis not collinear with x");
      }
    }
    // Both factors are zonal about phi's axis, so the product reduces to the
    // colatitude integral with the kernel profile in t = <axis, zeta>.
    const QuadratureRule& rule = gauss_legendre(spec.nodes);
    std::vector<double> acc(d, 0.0);
    for (int i = 0; i < spec.nodes; ++i) {
      const double theta = 0.5 * M_PI * (rule.nodes[i] + 1.0);
      const double t = std::cos(theta);
      const double w = rule.weights[i] * std::pow(std::sin(theta), n - 2) *
                       kernel_profile(signed_rho, rho, n, t);
      const std::vector<double> pv = phi.zonal_profile(t);
      for (int j = 0; j < d; ++j) acc[j] += w * pv[j];
    }
    const double front = surface_ratio(n) * 0.5 * M_PI;
    for (double& v : acc) v *= front;
    return {std::move(acc), 0.0};
  }

  auto integrand = [&](const UnitVector& eta) {
    std::vector<double> v = phi.evaluate(eta);
    const double k = poisson_szego(x, eta);
    for (double& c : v) c *= k;
    return v;
  };
  MonteCarloVectorEstimate est = monte_carlo_surface_integral_vec(integrand, d, n, spec);
  double err_sq = 0.0;
  for (double e : est.std_error) err_sq += e * e;
  return {std::move(est.value), std::sqrt(err_sq)};
}

double kernel_normalization(const BallPoint& x, const QuadratureSpec& spec) {
  spec.validate();
  const int n = x.dim();
  const double rho = x.norm();
  if (spec.method == QuadratureMethod::ZonalGaussLegendre) {
    return zonal_integral(
        n, [&](double t) { return kernel_profile(rho, rho, n, t); }, spec.nodes);
  }
  return monte_carlo_surface_integral(
             [&](const UnitVector& eta) { return poisson_szego(x, eta); }, n, spec)
      .value;
}

double hyperbolic_laplacian_residual(const std::function<double(const BallPoint&)>& u,
                                     const BallPoint& x, double h) {
  if (!(h > 0.0)) throw DomainError("hyperbolic_laplacian_residual: h must be positive");
  if (!(x.norm() + 2.0 * h < 1.0)) {
    throw DomainError("hyperbolic_laplacian_residual: stencil leaves the unit ball");
  }
  const int n = x.dim();
  const double u0 = u(x);
  double laplacian = 0.0;
  double radial = 0.0;
  std::vector<double> coords = x.coords();
  for (int i = 0; i < n; ++i) {
    const double xi = coords[i];
    coords[i] = xi + h;
    const double up = u(BallPoint(coords));
    coords[i] = xi - h;
    const double um = u(BallPoint(coords));
    coords[i] = xi;
    laplacian += (up - 2.0 * u0 + um) / (h * h);
    radial += xi * (up - um) / (2.0 * h);
  }
  const double w = 1.0 - x.norm() * x.norm();
  return w * w * laplacian + 2.0 * (n - 2) * w * radial;
}

}  // namespace hypharm
