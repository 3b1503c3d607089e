// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criterion 10 drives the CLI binary (path via --cli).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypharm/estimates.hpp"
#include "hypharm/gamma.hpp"
#include "hypharm/hypergeometric.hpp"
#include "hypharm/kernel.hpp"
#include "hypharm/quadrature.hpp"
#include "hypharm/sphere.hpp"

using namespace hypharm;

namespace {

struct Criterion {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

BallPoint radial_point(int n, double rho) {
  return BallPoint::radial(rho, UnitVector::axis(n, n - 1));
}

BallPoint random_ball_point(int n, std::mt19937_64& rng, double max_radius = 0.999) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  SphereSampler sampler(n, rng());
  std::vector<double> coords;
  sampler.next(coords);
  const double rho = max_radius * std::pow(unif(rng), 1.0 / n);
  for (double& c : coords) c *= rho;
  return BallPoint(std::move(coords));
}

// 1. Kernel normalization: zonal within 1e-9, Monte Carlo within 3 sigma.
Criterion criterion_normalization() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  double worst_zonal = 0.0;
  double worst_sigma = 0.0;
  for (int n : {3, 4, 5}) {
    for (double rho : {0.0, 0.3, 0.6, 0.9}) {
      const BallPoint x = radial_point(n, rho);
      const double zonal = kernel_normalization(x, QuadratureSpec::zonal(200));
      worst_zonal = std::max(worst_zonal, std::abs(zonal - 1.0));

      const auto mc = monte_carlo_surface_integral(
          [&x](const UnitVector& eta) { return poisson_szego(x, eta); }, n,
          QuadratureSpec::monte_carlo(1000000, 1000 + n * 10 + int(10 * rho)));
      const double sigma = std::max(mc.std_error, 1e-15);
      worst_sigma = std::max(worst_sigma, std::abs(mc.value - 1.0) / sigma);
    }
  }
  const double elapsed = seconds_since(start);
  c.require(worst_zonal <= 1e-9, "zonal deviation " + format(worst_zonal));
  c.require(worst_sigma <= 3.0, "MC deviation " + format(worst_sigma) + " sigma");
  c.require(elapsed < 10.0, "runtime " + format(elapsed) + " s");
  c.detail << "zonal " << format(worst_zonal) << ", MC " << format(worst_sigma)
           << " sigma, " << format(elapsed) << " s";
  return c;
}

// 2. Closed form vs quadrature on the 75-point grid.
Criterion criterion_closed_form() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {3, 4, 5}) {
    for (double q : {1.1, 1.5, 2.0, 3.0, 7.0}) {
      for (double rho : {0.0, 0.25, 0.5, 0.75, 0.95}) {
        const BallPoint x = radial_point(n, rho);
        const double closed = cq_closed_form(q, x);
        const double quad = cq_integral(q, x, QuadratureSpec::zonal(400));
        worst = std::max(worst, std::abs(closed - quad) / (1.0 + std::abs(closed)));
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.require(worst <= 1e-8, "relative deviation " + format(worst));
  c.require(elapsed < 30.0, "runtime " + format(elapsed) + " s");
  c.detail << "worst " << format(worst) << ", " << format(elapsed) << " s";
  return c;
}

// 3. n=3 explicit formula vs the hypergeometric form, plus exact anchors.
Criterion criterion_n3() {
  Criterion c;
  double worst = 0.0;
  for (double q : {1.25, 1.5, 2.0, 3.0, 5.0}) {
    for (int k = 1; k <= 9; ++k) {
      const double rho = 0.1 * k;
      worst = std::max(worst, std::abs(cq_n3_closed_form(q, rho) -
                                       cq_closed_form(q, radial_point(3, rho))));
    }
  }
  c.require(worst <= 1e-10, "grid deviation " + format(worst));
  const double anchor_half = std::abs(cq_n3_closed_form(2.0, 0.5) - 91.0 / 48.0);
  const double anchor_one = std::abs(cq_n3_closed_form(2.0, 1.0) - 16.0 / 3.0);
  const double anchor_sup = std::abs(cq_sup(2.0, 3) - 16.0 / 3.0);
  c.require(anchor_half <= 1e-12, "C_2(0.5 e3) anchor " + format(anchor_half));
  c.require(anchor_one <= 1e-12, "C_2(e3) anchor " + format(anchor_one));
  c.require(anchor_sup <= 1e-12, "sup anchor " + format(anchor_sup));
  c.detail << "grid " << format(worst) << ", anchors " << format(std::max(anchor_half, anchor_one));
  return c;
}

// 4. Sharpness ratio = 1 within 1e-8 for n in {3,4}, p in {1.5,2,4}, rho in {0.2,0.5,0.8}.
Criterion criterion_sharpness() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {3, 4}) {
    for (double p : {1.5, 2.0, 4.0}) {
      for (double rho : {0.2, 0.5, 0.8}) {
        const SharpnessReport report = verify_sharpness(
            ExponentPair::from_p(p), radial_point(n, rho), QuadratureSpec::zonal(200));
        worst = std::max(worst, std::abs(report.ratio - 1.0));
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.require(worst <= 1e-8, "ratio deviation " + format(worst));
  c.require(elapsed < 20.0, "runtime " + format(elapsed) + " s");
  c.detail << "worst |ratio-1| " << format(worst) << ", " << format(elapsed) << " s";
  return c;
}

// 5. Radial monotonicity and domination by the sup constant.
Criterion criterion_monotonicity() {
  Criterion c;
  double worst_drop = 0.0;
  double worst_excess = -1e300;
  std::mt19937_64 rng(2024);
  for (int n : {3, 4, 5}) {
    for (double q : {1.2, 1.5, 2.0, 5.0}) {
      double prev = -1.0;
      for (int k = 0; k < 50; ++k) {
        const double rho = k * (0.999 / 49.0);
        const double value = cq_closed_form(q, radial_point(n, rho));
        if (k > 0) worst_drop = std::max(worst_drop, (prev - value) / (1.0 + std::abs(value)));
        prev = value;
      }
      const double sup = cq_sup(q, n);
      for (int trial = 0; trial < 1000; ++trial) {
        const double value = cq_closed_form(q, random_ball_point(n, rng));
        worst_excess = std::max(worst_excess, (value - sup) / (1.0 + sup));
      }
    }
  }
  c.require(worst_drop <= 1e-12, "monotonicity drop " + format(worst_drop));
  c.require(worst_excess <= 1e-12, "sup excess " + format(worst_excess));
  c.detail << "drop " << format(worst_drop) << ", excess " << format(worst_excess);
  return c;
}

// 6. Derivative formula vs finite differences; quadratic transformation.
Criterion criterion_hypergeom_identities() {
  Criterion c;
  const double a_grid[] = {-3.0, -1.2, 0.5, 2.0};
  const double b_grid[] = {0.5, 1.5};
  const double c_grid[] = {2.0, 3.5};
  const double x_grid[] = {-0.9, -0.5, 0.0, 0.3, 0.8};
  double worst_fd = 0.0;
  for (double a : a_grid) {
    for (double b : b_grid) {
      for (double cc : c_grid) {
        const HypergeomParams params(a, b, cc);
        for (double x : x_grid) {
          const double h = 1e-5;
          const double fd =
              (gauss_2f1_series(params, x + h) - gauss_2f1_series(params, x - h)) / (2.0 * h);
          worst_fd = std::max(worst_fd, std::abs(gauss_2f1_derivative(params, x) - fd));
        }
      }
    }
  }
  c.require(worst_fd <= 1e-6, "derivative deviation " + format(worst_fd));

  double worst_qt = 0.0;
  for (double a : a_grid) {
    for (double b : b_grid) {
      for (double x : {0.05, 0.2, 0.45, 0.7}) {
        const double arg = 4.0 * x / ((1.0 + x) * (1.0 + x));
        const double lhs = gauss_2f1_series(HypergeomParams(a, b, 2.0 * b), arg);
        const double rhs = std::pow(1.0 + x, 2.0 * a) *
                           gauss_2f1_series(HypergeomParams(a, a - b + 0.5, b + 0.5), x * x);
        worst_qt = std::max(worst_qt, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
      }
    }
  }
  c.require(worst_qt <= 1e-9, "quadratic transformation deviation " + format(worst_qt));
  c.detail << "derivative " << format(worst_fd) << ", transformation " << format(worst_qt);
  return c;
}

// 7. Hyperbolic harmonicity of kernel slices with O(h^2) convergence.
Criterion criterion_harmonicity() {
  Criterion c;
  double worst_rel = 0.0;
  double worst_ratio_dev = 0.0;
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
      worst_rel = std::max(worst_rel, res_h / (1e-4 * (1.0 + u(x))));
      worst_ratio_dev = std::max(worst_ratio_dev, std::abs(res_h / res_half - 4.0));
    }
  }
  c.require(worst_rel <= 1.0, "residual at " + format(worst_rel) + "x tolerance");
  c.require(worst_ratio_dev <= 0.5, "halving ratio off by " + format(worst_ratio_dev));
  c.detail << "residual " << format(worst_rel) << "x tol, ratio dev " << format(worst_ratio_dev);
  return c;
}

// 8. L1 endpoint: cap means increase and approach the kernel limit.
Criterion criterion_endpoint() {
  Criterion c;
  const int n = 3;
  const UnitVector eta0 = UnitVector::axis(n, n - 1);
  const QuadratureSpec spec = QuadratureSpec::zonal(200);

  const BallPoint x0 = BallPoint::radial(0.5, eta0);
  double prev = 0.0;
  bool increasing = true;
  for (int i = 1; i <= 200; ++i) {
    const double u_i = l1_extremal_sequence(x0, eta0, i, spec);
    if (i > 1 && u_i < prev - 1e-12) increasing = false;
    prev = u_i;
  }
  c.require(increasing, "cap means not increasing");
  c.require(std::abs(prev - 9.0) <= 0.01 * 9.0,
            "u_200(0.5 e3) = " + format(prev) + " vs 9");
  double worst = std::abs(prev - 9.0) / 9.0;
  for (double rho : {0.25, 0.75}) {
    const BallPoint x = BallPoint::radial(rho, eta0);
    const double target = std::pow((1.0 + rho) / (1.0 - rho), n - 1);
    const double u_200 = l1_extremal_sequence(x, eta0, 200, spec);
    worst = std::max(worst, std::abs(u_200 - target) / target);
    c.require(std::abs(u_200 - target) <= 0.01 * target,
              "limit at rho=" + format(rho) + " off by " + format(std::abs(u_200 - target)));
  }
  c.detail << "worst relative gap " << format(worst);
  return c;
}

// 9. Pointwise inequality never violated on random data.
Criterion criterion_bound_validity() {
  Criterion c;
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_real_distribution<double> p_draw(1.2, 8.0);
  double worst = -1e300;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int d = (rng() % 2 == 0) ? 1 : n;
    // bounded data: low-order polynomial in the coordinates
    std::vector<std::vector<double>> coeff(d, std::vector<double>(1 + n + n, 0.0));
    for (auto& row : coeff) {
      for (double& v : row) v = unif(rng);
    }
    const BoundaryFunction phi = BoundaryFunction::vector_valued(
        n, d,
        [coeff, n, d](const UnitVector& eta) {
          std::vector<double> out(d, 0.0);
          for (int j = 0; j < d; ++j) {
            double acc = coeff[j][0];
            for (int i = 0; i < n; ++i) {
              acc += coeff[j][1 + i] * eta[i] + coeff[j][1 + n + i] * eta[i] * eta[i];
            }
            out[j] = acc;
          }
          return out;
        },
        "random polynomial");
    const BallPoint x = random_ball_point(n, rng, 0.9);
    const ExponentPair pq = ExponentPair::from_p(p_draw(rng));

    const auto u = poisson_integral(phi, x, QuadratureSpec::monte_carlo(20000, rng()));
    const auto norm_est = monte_carlo_surface_integral(
        [&](const UnitVector& eta) {
          const std::vector<double> v = phi.evaluate(eta);
          double acc = 0.0;
          for (double value : v) acc += value * value;
          return std::pow(acc, 0.5 * pq.p());
        },
        n, QuadratureSpec::monte_carlo(20000, rng()));
    const double norm = std::pow(norm_est.value, 1.0 / pq.p());
    const double norm_err =
        norm_est.value > 0.0 ? norm * norm_est.std_error / (pq.p() * norm_est.value) : 0.0;
    const double bound = pointwise_bound(pq, x);
    const double slack = 5.0 * (u.std_error + bound * norm_err) + 1e-12;
    worst = std::max(worst, (u.magnitude() - bound * norm) / slack);
  }
  c.require(worst <= 1.0, "violation at " + format(worst) + "x the slack");
  c.detail << "worst margin " << format(worst) << "x slack";
  return c;
}

// 10. CLI determinism and full-suite runtime.
Criterion criterion_cli(const std::string& cli_path) {
  Criterion c;
  if (cli_path.empty()) {
    c.require(false, "no --cli path provided");
    return c;
  }
  const std::string dir = "acceptance_cli_tmp";
  if (std::system(("mkdir -p " + dir).c_str()) != 0) {
    c.require(false, "cannot create scratch directory");
    return c;
  }

  auto read_file = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto run = [&](const std::string& args, const std::string& out) {
    const std::string cmd = cli_path + " " + args + " --output " + out + " 2>/dev/null";
    return std::system(cmd.c_str());
  };

  const auto start = std::chrono::steady_clock::now();
  const int rc1 = run("verify --suite all --n 3 --p 2 --radius 0.5 --samples 200000 --seed 7",
                      dir + "/verify1.json");
  const double verify_elapsed = seconds_since(start);
  const int rc2 = run("verify --suite all --n 3 --p 2 --radius 0.5 --samples 200000 --seed 7",
                      dir + "/verify2.json");
  c.require(rc1 == 0, "verify exit status " + format(rc1));
  c.require(rc2 == 0, "verify rerun exit status " + format(rc2));
  const std::string verify1 = read_file(dir + "/verify1.json");
  const std::string verify2 = read_file(dir + "/verify2.json");
  c.require(!verify1.empty() && verify1 == verify2, "verify output not byte-identical");
  c.require(verify_elapsed < 120.0, "verify runtime " + format(verify_elapsed) + " s");

  const int rc3 = run("table --n 4 --q-values 1.5,2,3 --radius-count 8 --format csv",
                      dir + "/table1.csv");
  const int rc4 = run("table --n 4 --q-values 1.5,2,3 --radius-count 8 --format csv",
                      dir + "/table2.csv");
  c.require(rc3 == 0 && rc4 == 0, "table exit status");
  const std::string table1 = read_file(dir + "/table1.csv");
  c.require(!table1.empty() && table1 == read_file(dir + "/table2.csv"),
            "table output not byte-identical");

  c.detail << "verify " << format(verify_elapsed) << " s, outputs byte-identical";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }

  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries = {
      {"normalization within 1e-9 (zonal) and 3 sigma (Monte Carlo)", criterion_normalization},
      {"closed form vs quadrature within 1e-8 on the 75-point grid", criterion_closed_form},
      {"n=3 explicit formula within 1e-10 plus exact anchors", criterion_n3},
      {"extremal sharpness ratio 1 within 1e-8", criterion_sharpness},
      {"radial monotonicity and sup domination", criterion_monotonicity},
      {"hypergeometric identities (derivative 1e-6, transformation 1e-9)",
       criterion_hypergeom_identities},
      {"kernel harmonicity residual with O(h^2) convergence", criterion_harmonicity},
      {"L1 endpoint cap sequence within 1% of the kernel limit", criterion_endpoint},
      {"pointwise bound holds on random data (5 sigma)", criterion_bound_validity},
      {"CLI determinism and runtime", [&]() { return criterion_cli(cli_path); }},
  };

  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    Criterion result = entries[i].run();
    if (!result.passed) ++failures;
    std::printf("[%s] %2zu. %s: %s\n", result.passed ? "PASS" : "FAIL", i + 1,
                entries[i].name, result.detail.str().c_str());
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("ACCEPTANCE: all %zu criteria passed\n", entries.size());
  } else {
    std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures, entries.size());
  }
  return failures == 0 ? 0 : 1;
}
