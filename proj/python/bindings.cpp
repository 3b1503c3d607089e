// pybind11 bindings for the hypharm core: kernel, sphere geometry,
// hypergeometric evaluation, and the sharp-estimate operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypharm/estimates.hpp"
#include "hypharm/gamma.hpp"
#include "hypharm/hypergeometric.hpp"
#include "hypharm/kernel.hpp"
#include "hypharm/quadrature.hpp"
#include "hypharm/sphere.hpp"
#include "hypharm/verify.hpp"

namespace py = pybind11;
using namespace hypharm;

namespace {

QuadratureSpec spec_from_args(const std::string& method, int nodes, int samples,
                              std::uint64_t seed) {
  if (method == "mc") return QuadratureSpec::monte_carlo(samples, seed);
  if (method == "zonal") return QuadratureSpec::zonal(nodes);
  throw DomainError("method must be 'zonal' or 'mc'");
}

BallPoint as_point(const std::vector<double>& coords) { return BallPoint(coords); }
UnitVector as_unit(const std::vector<double>& coords) { return UnitVector(coords); }

}  // namespace

PYBIND11_MODULE(_hypharm, m) {
  m.doc() = "Poisson-Szego kernel, hyperbolic harmonic extensions, and sharp "
            "Hardy-space pointwise estimates on the unit ball";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);
  py::register_exception<MethodMismatch>(m, "MethodMismatch", PyExc_ValueError);

  // hypergeometric
  m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("k"),
        "Rising factorial a(a+1)...(a+k-1) with (a)_0 = 1.");
  m.def(
      "gauss_2f1",
      [](double a, double b, double c, double x) {
        return gauss_2f1_series(HypergeomParams(a, b, c), x);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"),
      "Gauss hypergeometric series 2F1(a, b; c; x).");
  m.def(
      "gauss_2f1_integral",
      [](double a, double b, double c, double x, int nodes) {
        return gauss_2f1_integral(HypergeomParams(a, b, c), x, nodes);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("nodes") = 200,
      "Euler integral representation of 2F1 (requires c > b > 0, |x| < 1).");
  m.def(
      "gauss_2f1_derivative",
      [](double a, double b, double c, double x) {
        return gauss_2f1_derivative(HypergeomParams(a, b, c), x);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
  m.def(
      "gauss_2f1_at_one",
      [](double a, double b, double c) { return gauss_2f1_at_one(HypergeomParams(a, b, c)); },
      py::arg("a"), py::arg("b"), py::arg("c"));

  // sphere
  m.def("surface_ratio", &surface_ratio, py::arg("n"));
  m.def(
      "zonal_integral",
      [](int n, const std::function<double(double)>& g, int nodes) {
        return zonal_integral(n, g, nodes);
      },
      py::arg("n"), py::arg("g"), py::arg("nodes") = 200,
      "Integral over S^{n-1} of g(<axis, eta>) dsigma.");
  m.def(
      "uniform_sphere_sample",
      [](int n, int count, std::uint64_t seed) {
        std::vector<std::vector<double>> out;
        out.reserve(count);
        for (const UnitVector& v : uniform_sphere_sample(n, count, seed)) {
          out.push_back(v.coords());
        }
        return out;
      },
      py::arg("n"), py::arg("count"), py::arg("seed"));
  m.def(
      "mobius_boundary_map",
      [](const std::vector<double>& x, const std::vector<double>& eta) {
        return mobius_boundary_map(as_point(x), as_unit(eta)).coords();
      },
      py::arg("x"), py::arg("eta"));
  m.def(
      "mobius_jacobian",
      [](const std::vector<double>& x, const std::vector<double>& eta) {
        return mobius_jacobian(as_point(x), as_unit(eta));
      },
      py::arg("x"), py::arg("eta"));
  m.def(
      "monte_carlo_surface_integral",
      [](const std::function<double(const std::vector<double>&)>& f, int n, int samples,
         std::uint64_t seed) {
        const auto est = monte_carlo_surface_integral(
            [&f](const UnitVector& eta) { return f(eta.coords()); }, n,
            QuadratureSpec::monte_carlo(samples, seed));
        return py::make_tuple(est.value, est.std_error);
      },
      py::arg("f"), py::arg("n"), py::arg("samples"), py::arg("seed"),
      "Returns (estimate, standard_error).");

  // kernel
  m.def(
      "poisson_szego",
      [](const std::vector<double>& x, const std::vector<double>& zeta) {
        return poisson_szego(as_point(x), as_unit(zeta));
      },
      py::arg("x"), py::arg("zeta"));
  m.def(
      "kernel_normalization",
      [](const std::vector<double>& x, const std::string& method, int nodes, int samples,
         std::uint64_t seed) {
        return kernel_normalization(as_point(x), spec_from_args(method, nodes, samples, seed));
      },
      py::arg("x"), py::arg("method") = "zonal", py::arg("nodes") = 200,
      py::arg("samples") = 100000, py::arg("seed") = 1);
  m.def(
      "poisson_integral_extremal",
      [](const std::vector<double>& x, double q, int nodes) {
        const BallPoint point = as_point(x);
        return poisson_integral(extremal_boundary(point, q), point, QuadratureSpec::zonal(nodes))
            .value[0];
      },
      py::arg("x"), py::arg("q"), py::arg("nodes") = 200,
      "P_h[phi_*](x) for the extremal boundary data phi_* = P_h(x,.)^{q-1}.");
  m.def(
      "hyperbolic_laplacian_residual",
      [](const std::function<double(const std::vector<double>&)>& u,
         const std::vector<double>& x, double h) {
        return hyperbolic_laplacian_residual(
            [&u](const BallPoint& y) { return u(y.coords()); }, as_point(x), h);
      },
      py::arg("u"), py::arg("x"), py::arg("h"));

  // estimates
  m.def(
      "cq_integral",
      [](double q, const std::vector<double>& x, const std::string& method, int nodes,
         int samples, std::uint64_t seed) {
        return cq_integral(q, as_point(x), spec_from_args(method, nodes, samples, seed));
      },
      py::arg("q"), py::arg("x"), py::arg("method") = "zonal", py::arg("nodes") = 200,
      py::arg("samples") = 100000, py::arg("seed") = 1);
  m.def(
      "cq_closed_form",
      [](double q, const std::vector<double>& x) { return cq_closed_form(q, as_point(x)); },
      py::arg("q"), py::arg("x"));
  m.def("cq_sup", &cq_sup, py::arg("q"), py::arg("n"));
  m.def("cq_n3_closed_form", &cq_n3_closed_form, py::arg("q"), py::arg("rho"));
  m.def(
      "pointwise_bound",
      [](double p, const std::vector<double>& x) {
        return pointwise_bound(ExponentPair::from_p(p), as_point(x));
      },
      py::arg("p"), py::arg("x"));
  m.def(
      "uniform_bound",
      [](double p, const std::vector<double>& x) {
        return uniform_bound(ExponentPair::from_p(p), as_point(x));
      },
      py::arg("p"), py::arg("x"));
  m.def(
      "extremal_lp_norm",
      [](const std::vector<double>& x, double q, int nodes) {
        const BallPoint point = as_point(x);
        const ExponentPair pq = ExponentPair::from_q(q);
        return lp_norm(extremal_boundary(point, q), pq.p(), QuadratureSpec::zonal(nodes));
      },
      py::arg("x"), py::arg("q"), py::arg("nodes") = 200,
      "||phi_*||_p for the extremal boundary data at x.");
  m.def(
      "l1_extremal_sequence",
      [](const std::vector<double>& x0, const std::vector<double>& eta0, int i, int nodes) {
        return l1_extremal_sequence(as_point(x0), as_unit(eta0), i, QuadratureSpec::zonal(nodes));
      },
      py::arg("x0"), py::arg("eta0"), py::arg("i"), py::arg("nodes") = 200);
  m.def(
      "verify_sharpness",
      [](double p, const std::vector<double>& x, const std::string& method, int nodes,
         int samples, std::uint64_t seed) {
        const SharpnessReport report = verify_sharpness(
            ExponentPair::from_p(p), as_point(x), spec_from_args(method, nodes, samples, seed));
        py::dict out;
        out["x"] = report.x.coords();
        out["p"] = report.exponents.p();
        out["q"] = report.exponents.q();
        out["lhs"] = report.lhs;
        out["rhs"] = report.rhs;
        out["ratio"] = report.ratio;
        out["quadrature_error"] = report.quadrature_error;
        return out;
      },
      py::arg("p"), py::arg("x"), py::arg("method") = "zonal", py::arg("nodes") = 200,
      py::arg("samples") = 100000, py::arg("seed") = 1);

  // verification suites
  m.def("verify_suite_names", &verify_suite_names);
  m.def(
      "run_verify_suite",
      [](const std::string& suite, int n, double p, double radius, int nodes, int samples,
         std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.n = n;
        cfg.p = p;
        cfg.radius = radius;
        cfg.nodes = nodes;
        cfg.samples = samples;
        cfg.seed = seed;
        py::list out;
        for (const CheckResult& check : run_verify_suite(suite, cfg)) {
          py::dict item;
          item["name"] = check.name;
          item["passed"] = check.passed;
          item["measured"] = check.measured;
          item["tolerance"] = check.tolerance;
          out.append(item);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("n") = 3, py::arg("p") = 2.0, py::arg("radius") = 0.5,
      py::arg("nodes") = 200, py::arg("samples") = 200000, py::arg("seed") = 1);

#ifdef HYPHARM_VERSION
#define HYPHARM_STR_IMPL(x) #x
#define HYPHARM_STR(x) HYPHARM_STR_IMPL(x)
  m.attr("__version__") = HYPHARM_STR(HYPHARM_VERSION);
#else
  m.attr("__version__") = "dev";
#endif
}
