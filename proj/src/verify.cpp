#include "hypharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hypharm/estimates.hpp"
#include "hypharm/gamma.hpp"
#include "hypharm/hypergeometric.hpp"
#include "hypharm/kernel.hpp"
#include "hypharm/quadrature.hpp"
#include "hypharm/sphere.hpp"

namespace hypharm {

namespace {

// Ratio tracker: keeps the worst measured/tolerance over a grid.
struct Worst {
  double measured = 0.0;
  double tolerance = 1.0;
  bool any = false;

  void update(double m, double tol) {
    if (!any || m / tol > measured / tolerance) {
      measured = m;
      tolerance = tol;
      any = true;
    }
  }
  bool passed() const { return !any || measured <= tolerance; }
};

CheckResult make_result(const std::string& name, const Worst& w) {
  return {name, w.passed(), w.measured, w.tolerance};
}

BallPoint random_ball_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  SphereSampler sampler(n, rng());
  std::vector<double> coords;
  sampler.next(coords);
  const double rho = 0.999 * std::pow(unif(rng), 1.0 / n);
  for (double& c : coords) c *= rho;
  return BallPoint(std::move(coords));
}

// Bounded smooth test data: a few random cosine powers of random directions.
BoundaryFunction random_boundary_function(int n, int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_int_distribution<int> power(1, 4);
  struct Term {
    std::vector<double> direction;
    double weight;
    int exponent;
  };
  std::vector<std::vector<Term>> components(d);
  for (int j = 0; j < d; ++j) {
    const int terms = 2;
    for (int t = 0; t < terms; ++t) {
      SphereSampler sampler(n, rng());
      std::vector<double> dir;
      sampler.next(dir);
      components[j].push_back({dir, unif(rng), power(rng)});
    }
  }
  return BoundaryFunction::vector_valued(
      n, d,
      [components, d](const UnitVector& eta) {
        std::vector<double> out(d, 0.0);
        for (int j = 0; j < d; ++j) {
          for (const auto& term : components[j]) {
            double c = 0.0;
            for (int i = 0; i < eta.dim(); ++i) c += term.direction[i] * eta[i];
            out[j] += term.weight * std::pow(c, term.exponent);
          }
        }
        return out;
      },
      "random test data");
}

std::vector<CheckResult> suite_normalization(const VerifyConfig& cfg) {
  Worst zonal;
  Worst monte;
  for (int n : {3, 4, 5}) {
    for (double rho : {0.0, 0.3, 0.6, 0.9}) {
      const BallPoint x = BallPoint::radial(rho, UnitVector::axis(n, n - 1));
      const double value = kernel_normalization(x, QuadratureSpec::zonal(cfg.nodes));
      zonal.update(std::abs(value - 1.0), 1e-9);

      const auto est = monte_carlo_surface_integral(
          [&](const UnitVector& eta) { return poisson_szego(x, eta); }, n,
          QuadratureSpec::monte_carlo(cfg.samples, cfg.seed + n * 100 + int(rho * 10)));
      const double sigma = std::max(est.std_error, 1e-15);
      monte.update(std::abs(est.value - 1.0) / sigma, 3.0);
    }
  }
  return {make_result("normalization/zonal |I-1|", zonal),
          make_result("normalization/monte-carlo |I-1|/sigma", monte)};
}

std::vector<CheckResult> suite_closed_form(const VerifyConfig& cfg) {
  Worst worst;
  for (int n : {3, 4, 5}) {
    for (double q : {1.1, 1.5, 2.0, 3.0, 7.0}) {
      for (double rho : {0.0, 0.25, 0.5, 0.75, 0.95}) {
        const BallPoint x = BallPoint::radial(rho, UnitVector::axis(n, n - 1));
        const double via_quad = cq_integral(q, x, QuadratureSpec::zonal(std::max(cfg.nodes, 400)));
        const double closed = cq_closed_form(q, x);
        worst.update(std::abs(via_quad - closed), 1e-8 * (1.0 + std::abs(closed)));
      }
    }
  }
  return {make_result("closed-form/integral agreement", worst)};
}

std::vector<CheckResult> suite_n3(const VerifyConfig&) {
  Worst grid;
  for (double q : {1.25, 1.5, 2.0, 3.0, 5.0}) {
    for (int k = 1; k <= 9; ++k) {
      const double rho = 0.1 * k;
      const BallPoint x = BallPoint::radial(rho, UnitVector::axis(3, 2));
      grid.update(std::abs(cq_n3_closed_form(q, rho) - cq_closed_form(q, x)), 1e-10);
    }
  }
  Worst anchors;
  anchors.update(std::abs(cq_n3_closed_form(2.0, 0.5) - 91.0 / 48.0), 1e-12);
  anchors.update(std::abs(cq_n3_closed_form(2.0, 1.0) - 16.0 / 3.0), 1e-12);
  anchors.update(std::abs(cq_sup(2.0, 3) - 16.0 / 3.0), 1e-12);
  return {make_result("n3/explicit vs hypergeometric", grid),
          make_result("n3/anchor values", anchors)};
}

std::vector<CheckResult> suite_sharpness(const VerifyConfig& cfg) {
  Worst worst;
  const ExponentPair pq = ExponentPair::from_p(cfg.p);
  const BallPoint x = BallPoint::radial(cfg.radius, UnitVector::axis(cfg.n, cfg.n - 1));
  const SharpnessReport report = verify_sharpness(pq, x, QuadratureSpec::zonal(cfg.nodes));
  worst.update(std::abs(report.ratio - 1.0),
               std::max(1e-8, 10.0 * report.quadrature_error));
  return {make_result("sharpness/extremal ratio", worst)};
}

std::vector<CheckResult> suite_monotonicity(const VerifyConfig& cfg) {
  const int n = cfg.n;
  Worst monotone;
  Worst dominated;
  std::mt19937_64 rng(cfg.seed);
  for (double q : {1.2, 1.5, 2.0, 5.0}) {
    double prev = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double rho = k * (0.999 / 49.0);
      const BallPoint x = BallPoint::radial(rho, UnitVector::axis(n, n - 1));
      const double value = cq_closed_form(q, x);
      if (k > 0) monotone.update(prev - value, 1e-12 * (1.0 + std::abs(value)));
      prev = value;
    }
    const double sup = cq_sup(q, n);
    for (int trial = 0; trial < 1000; ++trial) {
      const BallPoint x = random_ball_point(n, rng);
      dominated.update(cq_closed_form(q, x) - sup, 1e-12 * (1.0 + sup));
    }
  }
  return {make_result("monotonicity/radial nondecreasing", monotone),
          make_result("monotonicity/dominated by sup", dominated)};
}

std::vector<CheckResult> suite_hypergeom(const VerifyConfig& cfg) {
  const double a_grid[] = {-3.0, -1.2, 0.5, 2.0};
  const double b_grid[] = {0.5, 1.5};
  const double c_grid[] = {2.0, 3.5};
  const double x_grid[] = {-0.9, -0.5, 0.0, 0.3, 0.8};

  Worst series_integral;
  Worst derivative;
  for (double a : a_grid) {
    for (double b : b_grid) {
      for (double c : c_grid) {
        const HypergeomParams params(a, b, c);
        for (double x : x_grid) {
          const double series = gauss_2f1_series(params, x);
          const double integral = gauss_2f1_integral(params, x, std::max(cfg.nodes, 200));
          series_integral.update(std::abs(series - integral), 1e-9 * (1.0 + std::abs(series)));

          const double h = 1e-5;
          const double fd = (gauss_2f1_series(params, x + h) - gauss_2f1_series(params, x - h)) /
                            (2.0 * h);
          derivative.update(std::abs(gauss_2f1_derivative(params, x) - fd), 1e-6);
        }
      }
    }
  }

  Worst quad_transform;
  for (double a : a_grid) {
    for (double b : b_grid) {
      for (double x : {0.05, 0.2, 0.45, 0.7}) {
        const double lhs = gauss_2f1_series(HypergeomParams(a, b, 2.0 * b),
                                            4.0 * x / ((1.0 + x) * (1.0 + x)));
        const double rhs = std::pow(1.0 + x, 2.0 * a) *
                           gauss_2f1_series(HypergeomParams(a, a - b + 0.5, b + 0.5), x * x);
        quad_transform.update(std::abs(lhs - rhs), 1e-9 * (1.0 + std::abs(lhs)));
      }
    }
  }
  return {make_result("hypergeom/series vs integral", series_integral),
          make_result("hypergeom/derivative vs finite differences", derivative),
          make_result("hypergeom/quadratic transformation", quad_transform)};
}

std::vector<CheckResult> suite_harmonicity(const VerifyConfig&) {
  Worst residual_size;
  Worst halving;
  const double h = 1e-3;
  for (int n : {3, 4, 5}) {
    const UnitVector zeta = UnitVector::axis(n, n - 1);
    const auto u = [&zeta](const BallPoint& y) { return poisson_szego(y, zeta); };
    std::vector<BallPoint> points;
    for (double rho : {0.4, 0.6, 0.8}) {
      points.push_back(BallPoint::radial(rho, UnitVector::axis(n, 0)));
    }
    for (double rho : {0.4, 0.8}) {
      points.push_back(BallPoint::radial(-rho, zeta));
    }
    for (const BallPoint& x : points) {
      const double res_h = std::abs(hyperbolic_laplacian_residual(u, x, h));
      const double res_half = std::abs(hyperbolic_laplacian_residual(u, x, 0.5 * h));
      residual_size.update(res_h, 1e-4 * (1.0 + u(x)));
      const double ratio = res_h / res_half;
      halving.update(std::abs(ratio - 4.0), 0.5);
    }
  }
  return {make_result("harmonicity/residual magnitude", residual_size),
          make_result("harmonicity/O(h^2) halving ratio", halving)};
}

std::vector<CheckResult> suite_endpoint(const VerifyConfig& cfg) {
  const int n = cfg.n;
  const UnitVector eta0 = UnitVector::axis(n, n - 1);
  const QuadratureSpec spec = QuadratureSpec::zonal(cfg.nodes);

  Worst increasing;
  Worst limit;
  for (double rho : {0.25, cfg.radius, 0.75}) {
    const BallPoint x0 = BallPoint::radial(rho, eta0);
    const double target = std::pow((1.0 + rho) / (1.0 - rho), n - 1);
    double prev = 0.0;
    for (int i : {1, 2, 5, 10, 20, 50, 100, 200}) {
      const double u_i = l1_extremal_sequence(x0, eta0, i, spec);
      if (i > 1) increasing.update(prev - u_i, 1e-12 * (1.0 + u_i));
      prev = u_i;
    }
    limit.update(std::abs(prev - target) / target, 0.01);
  }
  return {make_result("endpoint/cap means increasing", increasing),
          make_result("endpoint/limit within 1%", limit)};
}

std::vector<CheckResult> suite_bound(const VerifyConfig& cfg) {
  Worst worst;
  std::mt19937_64 rng(cfg.seed + 7);
  std::uniform_real_distribution<double> p_draw(1.2, 8.0);
  const int trials = 25;
  const int samples = std::max(1000, cfg.samples / 10);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int d = (rng() % 2 == 0) ? 1 : n;
    const BoundaryFunction phi = random_boundary_function(n, d, rng);
    const BallPoint x = random_ball_point(n, rng);
    const ExponentPair pq = ExponentPair::from_p(p_draw(rng));
    const QuadratureSpec spec = QuadratureSpec::monte_carlo(samples, rng());

    const PoissonIntegralResult u = poisson_integral(phi, x, spec);
    const double bound = pointwise_bound(pq, x);
    const auto norm_est = monte_carlo_surface_integral(
        [&](const UnitVector& eta) {
          const std::vector<double> v = phi.evaluate(eta);
          double acc = 0.0;
          for (double c : v) acc += c * c;
          return std::pow(acc, 0.5 * pq.p());
        },
        n, QuadratureSpec::monte_carlo(samples, rng()));
    const double norm = std::pow(norm_est.value, 1.0 / pq.p());
    const double norm_err =
        norm_est.value > 0.0 ? norm * norm_est.std_error / (pq.p() * norm_est.value) : 0.0;
    const double rhs = bound * norm;
    const double slack = 5.0 * (u.std_error + bound * norm_err) + 1e-12;
    worst.update(u.magnitude() - rhs, slack);
  }
  return {make_result("bound/pointwise inequality on random data", worst)};
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"normalization", "closed-form", "n3", "sharpness", "monotonicity",
          "hypergeom", "harmonicity", "endpoint", "bound"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "normalization") return suite_normalization(cfg);
  if (suite == "closed-form") return suite_closed_form(cfg);
  if (suite == "n3") return suite_n3(cfg);
  if (suite == "sharpness") return suite_sharpness(cfg);
  if (suite == "monotonicity") return suite_monotonicity(cfg);
  if (suite == "hypergeom") return suite_hypergeom(cfg);
  if (suite == "harmonicity") return suite_harmonicity(cfg);
  if (suite == "endpoint") return suite_endpoint(cfg);
  if (suite == "bound") return suite_bound(cfg);
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const std::string& name : verify_suite_names()) {
      std::vector<CheckResult> part = run_verify_suite(name, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw DomainError("run_verify_suite: unknown suite '" + suite + "'");
}

}  // namespace hypharm
