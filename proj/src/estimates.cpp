#include "hypharm/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "hypharm/gamma.hpp"
#include "hypharm/hypergeometric.hpp"
#include "hypharm/quadrature.hpp"

namespace hypharm {

namespace {

HypergeomParams cq_params(double q, int n) {
  return HypergeomParams(-(n - 1.0) * (q - 1.0), 0.5 * n + q - n * q, 0.5 * n);
}

std::string format_label(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

// Monte Carlo estimate of (int ||phi||^p)^{1/p} with a delta-method error.
struct NormEstimate {
  double value;
  double std_error;
};

NormEstimate lp_norm_monte_carlo(const BoundaryFunction& phi, double p,
                                 const QuadratureSpec& spec) {
  auto integrand = [&](const UnitVector& eta) {
    const std::vector<double> v = phi.evaluate(eta);
    double acc = 0.0;
    for (double c : v) acc += c * c;
    return std::pow(acc, 0.5 * p);
  };
  const MonteCarloEstimate est = monte_carlo_surface_integral(integrand, phi.domain_dim, spec);
  if (!(est.value > 0.0)) return {0.0, 0.0};
  const double value = std::pow(est.value, 1.0 / p);
  const double deriv = value / (p * est.value);
  return {value, est.std_error * deriv};
}

}  // namespace

ExponentPair ExponentPair::from_p(double p) {
  if (std::isinf(p) && p > 0.0) return ExponentPair(p, 1.0);
  if (!(p > 1.0) || std::isnan(p)) {
    throw DomainError("ExponentPair: p must lie in (1, inf]");
  }
  return ExponentPair(p, p / (p - 1.0));
}

ExponentPair ExponentPair::from_q(double q) {
  if (q == 1.0) return ExponentPair(std::numeric_limits<double>::infinity(), 1.0);
  if (!(q > 1.0) || std::isinf(q) || std::isnan(q)) {
    throw DomainError("ExponentPair: q must lie in [1, inf)");
  }
  return ExponentPair(q / (q - 1.0), q);
}

bool ExponentPair::p_is_infinite() const { return std::isinf(p_); }

double cq_integral(double q, const BallPoint& x, const QuadratureSpec& spec) {
  if (!(q > 1.0)) throw DomainError("cq_integral: requires q > 1");
  spec.validate();
  const int n = x.dim();
  const double expo = (n - 1.0) * (q - 1.0);
  if (spec.method == QuadratureMethod::MonteCarlo) {
    return monte_carlo_surface_integral(
               [&](const UnitVector& eta) {
                 return std::pow(squared_distance(x, eta), expo);
               },
               n, spec)
        .value;
  }
  const double rho = x.norm();
  return zonal_integral(
      n, [&](double t) { return std::pow(1.0 + rho * rho - 2.0 * rho * t, expo); },
      spec.nodes);
}

double cq_closed_form(double q, const BallPoint& x) {
  if (!(q >= 1.0)) throw DomainError("cq_closed_form: requires q >= 1");
  const double rho = x.norm();
  return gauss_2f1_series(cq_params(q, x.dim()), rho * rho);
}

double cq_sup(double q, int n) {
  if (n < 3) throw DomainError("cq_sup: dimension must be >= 3");
  if (!(q >= 1.0)) throw DomainError("cq_sup: requires q >= 1");
  if (q == 1.0) return 1.0;
  // Convergent at the endpoint: c - a - b = (n-1)(2q-1) > 0.
  return gauss_2f1_at_one(cq_params(q, n));
}

double cq_n3_closed_form(double q, double rho) {
  if (!(q > 1.0)) throw DomainError("cq_n3_closed_form: requires q > 1");
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("cq_n3_closed_form: rho must lie in [0, 1]");
  }
  const double m = 4.0 * q - 2.0;
  if (rho < 1e-4) {
    // Even series in rho; the direct difference cancels to O(rho).
    const double r2 = rho * rho;
    const double c2 = (m - 1.0) * (m - 2.0) / 6.0;
    const double c4 = c2 * (m - 3.0) * (m - 4.0) / 20.0;
    return 1.0 + r2 * (c2 + r2 * c4);
  }
  return (std::pow(1.0 + rho, m) - std::pow(1.0 - rho, m)) / (2.0 * m * rho);
}

double pointwise_bound(const ExponentPair& exponents, const BallPoint& x) {
  if (exponents.p_is_infinite()) return 1.0;
  const int n = x.dim();
  const double cq = cq_closed_form(exponents.q(), x);
  return std::pow(cq, 1.0 / exponents.q()) /
         std::pow(1.0 - x.norm() * x.norm(), (n - 1.0) / exponents.p());
}

double uniform_bound(const ExponentPair& exponents, const BallPoint& x) {
  if (exponents.p_is_infinite()) return 1.0;
  const int n = x.dim();
  const double cq = cq_sup(exponents.q(), n);
  return std::pow(cq, 1.0 / exponents.q()) /
         std::pow(1.0 - x.norm() * x.norm(), (n - 1.0) / exponents.p());
}

BoundaryFunction extremal_boundary(const BallPoint& x, double q) {
  if (!(q > 1.0)) throw DomainError("extremal_boundary: requires q > 1");
  const int n = x.dim();
  const double rho = x.norm();
  const double expo = q - 1.0;
  UnitVector axis = rho > 0.0 ? UnitVector(x.coords()) : UnitVector::axis(n, n - 1);
  auto profile = [rho, n, expo](double t) {
    const double d2 = 1.0 + rho * rho - 2.0 * rho * t;
    if (rho > 0.99) {
      return std::exp(expo * (n - 1) * (std::log1p(-rho * rho) - std::log(d2)));
    }
    return std::pow((1.0 - rho * rho) / d2, expo * (n - 1));
  };
  BoundaryFunction phi = BoundaryFunction::zonal_scalar(
      std::move(axis), profile, format_label("extremal(q=%g, |x|=%g)", q, rho));
  phi.evaluate = [x, expo](const UnitVector& eta) {
    return std::vector<double>{std::pow(poisson_szego(x, eta), expo)};
  };
  return phi;
}

double lp_norm(const BoundaryFunction& phi, double p, const QuadratureSpec& spec) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: requires p >= 1");
  if (!phi.evaluate) throw DomainError("lp_norm: boundary function has no evaluator");
  spec.validate();
  const int n = phi.domain_dim;
  if (std::isinf(p)) {
    const int count = std::max(spec.nodes, 100000);
    SphereSampler sampler(n, spec.seed);
    std::vector<double> buf;
    double sup = 0.0;
    for (int i = 0; i < count; ++i) {
      sampler.next(buf);
      const std::vector<double> v = phi.evaluate(UnitVector(buf));
      double acc = 0.0;
      for (double c : v) acc += c * c;
      sup = std::max(sup, acc);
    }
    return std::sqrt(sup);
  }
  if (spec.method == QuadratureMethod::ZonalGaussLegendre) {
    if (!phi.is_zonal()) {
      throw MethodMismatch("lp_norm: zonal quadrature requested for non-zonal data");
    }
    const double integral = zonal_integral(
        n,
        [&](double t) {
          const std::vector<double> v = phi.zonal_profile(t);
          double acc = 0.0;
          for (double c : v) acc += c * c;
          return std::pow(acc, 0.5 * p);
        },
        spec.nodes);
    return std::pow(integral, 1.0 / p);
  }
  return lp_norm_monte_carlo(phi, p, spec).value;
}

double l1_extremal_sequence(const BallPoint& x0, const UnitVector& eta0, int i,
                            const QuadratureSpec& spec) {
  if (i < 1) throw DomainError("l1_extremal_sequence: index must be >= 1");
  if (x0.dim() != eta0.dim()) throw DomainError("l1_extremal_sequence: dimension mismatch");
  spec.validate();
  const int n = x0.dim();
  // The cap integral is always zonal; a Monte Carlo spec only contributes
  // its sample count as a hint, clamped to a sane node count.
  const int nodes = spec.method == QuadratureMethod::ZonalGaussLegendre
                        ? std::max(spec.nodes, 2)
                        : 200;
  const double rho = x0.norm();
  if (rho == 0.0) return 1.0;  // kernel is identically 1 at the origin

  // Cap {|zeta - eta0| <= 1/i} in the colatitude about eta0: t >= 1 - 1/(2i^2).
  const double t0 = 1.0 - 1.0 / (2.0 * static_cast<double>(i) * static_cast<double>(i));
  const double theta0 = std::acos(std::clamp(t0, -1.0, 1.0));
  const QuadratureRule rule = gauss_legendre_on(0.0, theta0, nodes);

  const double along = dot(x0, eta0);
  const double perp_sq = std::max(0.0, rho * rho - along * along);
  const bool aligned = perp_sq <= 1e-24;
  const double perp = std::sqrt(perp_sq);
  const double one_minus = 1.0 - rho * rho;

  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double theta = rule.nodes[k];
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double w = rule.weights[k] * std::pow(st, n - 2);
    double kernel_mean;
    if (aligned) {
      kernel_mean = std::pow(one_minus / (1.0 + rho * rho - 2.0 * along * ct), n - 1);
    } else {
      // Average the kernel over the azimuthal (n-2)-sphere of the cap ring.
      kernel_mean = zonal_integral(
          n - 1,
          [&](double s) {
            const double d2 = 1.0 + rho * rho - 2.0 * (along * ct + perp * st * s);
            return std::pow(one_minus / d2, n - 1);
          },
          nodes);
    }
    num += w * kernel_mean;
    den += w;
  }
  return num / den;
}

SharpnessReport verify_sharpness(const ExponentPair& exponents, const BallPoint& x,
                                 const QuadratureSpec& spec) {
  if (exponents.p_is_infinite()) {
    throw DomainError("verify_sharpness: requires finite p");
  }
  spec.validate();
  const double p = exponents.p();
  const double q = exponents.q();
  const BoundaryFunction phi = extremal_boundary(x, q);
  const double bound = pointwise_bound(exponents, x);

  double lhs;
  double norm;
  double quad_error;
  if (spec.method == QuadratureMethod::ZonalGaussLegendre) {
    lhs = poisson_integral(phi, x, spec).value[0];
    norm = lp_norm(phi, p, spec);
    QuadratureSpec coarse = spec;
    coarse.nodes = std::max(2, spec.nodes / 2);
    const double lhs_c = poisson_integral(phi, x, coarse).value[0];
    const double norm_c = lp_norm(phi, p, coarse);
    const double rhs = bound * norm;
    quad_error = (std::abs(lhs - lhs_c) + bound * std::abs(norm - norm_c)) / rhs;
    quad_error = std::max(quad_error, 1e-14);  // floor at refinement noise
  } else {
    const PoissonIntegralResult integral = poisson_integral(phi, x, spec);
    lhs = integral.value[0];
    const NormEstimate norm_est = lp_norm_monte_carlo(phi, p, spec);
    norm = norm_est.value;
    const double rhs = bound * norm;
    quad_error = (integral.std_error + bound * norm_est.std_error) / rhs;
  }
  const double rhs = bound * norm;
  return {x, exponents, lhs, rhs, lhs / rhs, quad_error};
}

}  // namespace hypharm
