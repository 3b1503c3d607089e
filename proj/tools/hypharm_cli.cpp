// Command-line front end: sharp-constant evaluation, pointwise/uniform
// bounds, kernel queries, verification suites, and sweep tables with
// machine-readable output (schema "hypharm/1").

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypharm/estimates.hpp"
#include "hypharm/kernel.hpp"
#include "hypharm/sphere.hpp"
#include "hypharm/verify.hpp"

namespace {

using hypharm::BallPoint;
using hypharm::ExponentPair;
using hypharm::QuadratureMethod;
using hypharm::QuadratureSpec;
using hypharm::UnitVector;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "hypharm/1";

struct CommonOpts {
  int n = 3;
  double p = 0.0;
  double q = 0.0;
  bool has_p = false;
  bool has_q = false;
  bool has_n = false;
  bool has_radius = false;
  double radius = 0.0;
  int axis = 0;  // 1-based; 0 means e_n
  std::vector<double> coords;
  std::string method = "zonal";
  int nodes = 200;
  int samples = 1000000;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
};

void add_point_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--n", opts.n, "ball dimension (n >= 3)")->check(CLI::Range(3, 64));
  cmd->add_option("--radius", opts.radius, "|x| for an axis-aligned point")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--axis", opts.axis, "1-based axis index for --radius (default n)");
  cmd->add_option("--x", opts.coords, "explicit point coordinates")->delimiter(',');
}

void add_quadrature_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--method", opts.method, "quadrature method")
      ->check(CLI::IsMember({"zonal", "mc"}));
  cmd->add_option("--nodes", opts.nodes, "Gauss-Legendre nodes")->check(CLI::Range(2, 100000));
  cmd->add_option("--samples", opts.samples, "Monte Carlo samples")
      ->check(CLI::Range(1, 100000000));
  cmd->add_option("--seed", opts.seed, "Monte Carlo seed");
}

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", opts.output, "write the report to a file instead of stdout");
}

void add_exponent_options(CLI::App* cmd, CommonOpts& opts) {
  auto* p_opt = cmd->add_option("--p", opts.p, "Hoelder exponent p in (1, inf)");
  auto* q_opt = cmd->add_option("--q", opts.q, "conjugate exponent q in [1, inf)");
  p_opt->excludes(q_opt);
  q_opt->excludes(p_opt);
}

ExponentPair make_exponents(const CommonOpts& opts) {
  if (opts.has_p == opts.has_q) {
    throw hypharm::DomainError("exactly one of --p / --q must be supplied");
  }
  return opts.has_p ? ExponentPair::from_p(opts.p) : ExponentPair::from_q(opts.q);
}

BallPoint make_point(const CommonOpts& opts) {
  if (!opts.coords.empty()) {
    if (opts.has_n && static_cast<int>(opts.coords.size()) != opts.n) {
      throw hypharm::DomainError("--x has a different dimension than --n");
    }
    return BallPoint(opts.coords);
  }
  const int axis_index = opts.axis > 0 ? opts.axis - 1 : opts.n - 1;
  return BallPoint::radial(opts.radius, UnitVector::axis(opts.n, axis_index));
}

QuadratureSpec make_spec(const CommonOpts& opts) {
  if (opts.method == "mc") {
    return QuadratureSpec::monte_carlo(opts.samples, opts.seed);
  }
  return QuadratureSpec::zonal(opts.nodes);
}

json quadrature_block(const CommonOpts& opts) {
  json block;
  block["method"] = opts.method;
  if (opts.method == "mc") {
    block["samples"] = opts.samples;
    block["seed"] = opts.seed;
  } else {
    block["nodes"] = opts.nodes;
  }
  return block;
}

void emit(const std::string& text, const CommonOpts& opts) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
  out << text;
}

std::string csv_row(const std::vector<std::pair<std::string, double>>& fields, bool header) {
  std::ostringstream os;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i].first;
  }
  os << '\n';
  if (header) return os.str();
  std::ostringstream row;
  char buf[40];
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) row << ',';
    std::snprintf(buf, sizeof(buf), "%.12g", fields[i].second);
    row << buf;
  }
  row << '\n';
  return os.str() + row.str();
}

int run_constant(const CommonOpts& opts) {
  const ExponentPair pq = make_exponents(opts);
  const BallPoint x = make_point(opts);
  const double q = pq.q();
  const double closed = hypharm::cq_closed_form(q, x);
  const double sup = hypharm::cq_sup(q, x.dim());
  double integral = closed;
  double error = 0.0;
  if (q > 1.0) {
    integral = hypharm::cq_integral(q, x, make_spec(opts));
    error = std::abs(integral - closed);
  }

  if (opts.format == "csv") {
    emit(csv_row({{"n", double(x.dim())},
                  {"q", q},
                  {"p", pq.p()},
                  {"radius", x.norm()},
                  {"C_q_x", closed},
                  {"C_q_x_integral", integral},
                  {"C_q_sup", sup}},
                 false),
         opts);
    return 0;
  }
  json report;
  report["schema"] = kSchema;
  report["command"] = "constant";
  report["inputs"] = {{"n", x.dim()}, {"q", q}, {"p", pq.p()}, {"radius", x.norm()}};
  report["quadrature"] = quadrature_block(opts);
  report["results"] = {{"C_q_x", closed}, {"C_q_x_integral", integral}, {"C_q_sup", sup}};
  report["error_estimate"] = error;
  emit(report.dump(2) + "\n", opts);
  return 0;
}

int run_bound(const CommonOpts& opts) {
  const ExponentPair pq = make_exponents(opts);
  const BallPoint x = make_point(opts);
  const double pointwise = hypharm::pointwise_bound(pq, x);
  const double uniform = hypharm::uniform_bound(pq, x);

  if (opts.format == "csv") {
    emit(csv_row({{"n", double(x.dim())},
                  {"q", pq.q()},
                  {"p", pq.p()},
                  {"radius", x.norm()},
                  {"bound_pointwise", pointwise},
                  {"bound_uniform", uniform}},
                 false),
         opts);
    return 0;
  }
  json report;
  report["schema"] = kSchema;
  report["command"] = "bound";
  report["inputs"] = {{"n", x.dim()}, {"q", pq.q()}, {"p", pq.p()}, {"radius", x.norm()}};
  report["results"] = {{"bound_pointwise", pointwise},
                       {"bound_uniform", uniform},
                       {"C_q_x", hypharm::cq_closed_form(pq.q(), x)},
                       {"C_q_sup", hypharm::cq_sup(pq.q(), x.dim())}};
  report["error_estimate"] = 0.0;
  emit(report.dump(2) + "\n", opts);
  return 0;
}

int run_kernel(const CommonOpts& opts, const std::vector<double>& zeta_coords) {
  const BallPoint x = make_point(opts);
  const UnitVector zeta =
      zeta_coords.empty() ? UnitVector::axis(x.dim(), x.dim() - 1) : UnitVector(zeta_coords);
  const double value = hypharm::poisson_szego(x, zeta);
  const double max_value =
      std::pow((1.0 + x.norm()) / (1.0 - x.norm()), x.dim() - 1);
  const double normalization = hypharm::kernel_normalization(x, make_spec(opts));

  json report;
  report["schema"] = kSchema;
  report["command"] = "kernel";
  report["inputs"] = {{"n", x.dim()}, {"x", x.coords()}, {"zeta", zeta.coords()}};
  report["quadrature"] = quadrature_block(opts);
  report["results"] = {{"P_h", value},
                       {"P_h_max", max_value},
                       {"normalization", normalization},
                       {"normalization_residual", std::abs(normalization - 1.0)}};
  report["error_estimate"] = std::abs(normalization - 1.0);
  emit(report.dump(2) + "\n", opts);
  return 0;
}

int run_verify(const CommonOpts& opts, const std::string& suite, bool radius_given) {
  hypharm::VerifyConfig cfg;
  cfg.n = opts.n;
  cfg.p = opts.has_p ? opts.p : (opts.has_q ? ExponentPair::from_q(opts.q).p() : 2.0);
  cfg.radius = radius_given ? opts.radius : 0.5;
  cfg.nodes = opts.nodes;
  cfg.samples = opts.samples;
  cfg.seed = opts.seed;

  const std::vector<hypharm::CheckResult> checks = hypharm::run_verify_suite(suite, cfg);
  bool all_passed = true;
  json items = json::array();
  for (const auto& check : checks) {
    all_passed = all_passed && check.passed;
    items.push_back({{"name", check.name},
                     {"passed", check.passed},
                     {"measured", check.measured},
                     {"tolerance", check.tolerance}});
  }
  json report;
  report["schema"] = kSchema;
  report["command"] = "verify";
  report["inputs"] = {{"suite", suite},     {"n", cfg.n},         {"p", cfg.p},
                      {"radius", cfg.radius}, {"nodes", cfg.nodes}, {"samples", cfg.samples},
                      {"seed", cfg.seed}};
  report["checks"] = items;
  report["passed"] = all_passed;
  emit(report.dump(2) + "\n", opts);
  return all_passed ? 0 : 2;
}

struct TableRow {
  int n;
  double q;
  double p;
  double radius;
  double cq_x;
  double cq_sup;
  double bound_pointwise;
  double bound_uniform;
};

int table_worker_count() {
  unsigned count = std::thread::hardware_concurrency();
  if (count == 0) count = 1;
  if (const char* env = std::getenv("HYPHARM_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) count = std::min<unsigned>(count, static_cast<unsigned>(parsed));
  }
  return static_cast<int>(count);
}

int run_table(const CommonOpts& opts, std::vector<double> q_values, int radius_count,
              double radius_max) {
  if (q_values.empty()) q_values = {1.25, 1.5, 2.0, 3.0, 5.0};
  if (radius_count < 1) throw hypharm::DomainError("table: radius count must be >= 1");
  std::vector<double> radii(radius_count);
  for (int i = 0; i < radius_count; ++i) {
    radii[i] = radius_count == 1 ? 0.0 : radius_max * i / (radius_count - 1);
  }

  std::vector<TableRow> rows(q_values.size() * radii.size());
  const int workers = table_worker_count();
  const int cells = static_cast<int>(rows.size());
  std::vector<std::thread> pool;
  // Cells are independent; output order is fixed by the grid index.
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int cell = w; cell < cells; cell += workers) {
        const double q = q_values[cell / radii.size()];
        const double radius = radii[cell % radii.size()];
        const ExponentPair pq = ExponentPair::from_q(q);
        const BallPoint x = BallPoint::radial(radius, UnitVector::axis(opts.n, opts.n - 1));
        rows[cell] = {opts.n,
                      q,
                      pq.p(),
                      radius,
                      hypharm::cq_closed_form(q, x),
                      hypharm::cq_sup(q, opts.n),
                      hypharm::pointwise_bound(pq, x),
                      hypharm::uniform_bound(pq, x)};
      }
    });
  }
  for (auto& thread : pool) thread.join();

  if (opts.format == "json") {
    json items = json::array();
    for (const TableRow& row : rows) {
      items.push_back({{"n", row.n},
                       {"q", row.q},
                       {"p", row.p},
                       {"radius", row.radius},
                       {"C_q_x", row.cq_x},
                       {"C_q_sup", row.cq_sup},
                       {"bound_pointwise", row.bound_pointwise},
                       {"bound_uniform", row.bound_uniform}});
    }
    json report;
    report["schema"] = kSchema;
    report["command"] = "table";
    report["inputs"] = {{"n", opts.n}, {"q_values", q_values}, {"radii", radii}};
    report["rows"] = items;
    emit(report.dump(2) + "\n", opts);
    return 0;
  }

  std::ostringstream os;
  os << "n,q,p,radius,C_q_x,C_q_sup,bound_pointwise,bound_uniform\n";
  char buf[40];
  for (const TableRow& row : rows) {
    os << row.n;
    for (double v : {row.q, row.p, row.radius, row.cq_x, row.cq_sup, row.bound_pointwise,
                     row.bound_uniform}) {
      std::snprintf(buf, sizeof(buf), "%.12g", v);
      os << ',' << buf;
    }
    os << '\n';
  }
  emit(os.str(), opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"sharp Hardy-space estimates for hyperbolic harmonic maps on the unit ball"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<double> zeta_coords;
  std::string suite = "all";
  std::vector<double> q_values;
  int radius_count = 10;
  double radius_max = 0.9;

  CLI::App* constant = app.add_subcommand("constant", "evaluate C_q(x) and C_q");
  add_point_options(constant, opts);
  add_exponent_options(constant, opts);
  add_quadrature_options(constant, opts);
  add_output_options(constant, opts);

  CLI::App* bound = app.add_subcommand("bound", "evaluate the pointwise and uniform bounds");
  add_point_options(bound, opts);
  add_exponent_options(bound, opts);
  add_output_options(bound, opts);

  CLI::App* kernel = app.add_subcommand("kernel", "evaluate the Poisson-Szego kernel");
  add_point_options(kernel, opts);
  kernel->add_option("--zeta", zeta_coords, "boundary point coordinates")->delimiter(',');
  add_quadrature_options(kernel, opts);
  add_output_options(kernel, opts);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_point_options(verify, opts);
  add_exponent_options(verify, opts);
  add_quadrature_options(verify, opts);
  add_output_options(verify, opts);
  verify->add_option("--suite", suite, "suite name or 'all'");

  CLI::App* table = app.add_subcommand("table", "sweep a (q, radius) grid");
  add_point_options(table, opts);
  table->add_option("--q-values", q_values, "q grid values")->delimiter(',');
  table->add_option("--radius-count", radius_count, "number of radius grid points");
  table->add_option("--radius-max", radius_max, "largest radius in the grid")
      ->check(CLI::Range(0.0, 0.999));
  add_output_options(table, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  const auto option_given = [](CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  for (CLI::App* cmd : {constant, bound, kernel, verify, table}) {
    if (!app.got_subcommand(cmd)) continue;
    opts.has_p = option_given(cmd, "--p");
    opts.has_q = option_given(cmd, "--q");
    opts.has_n = option_given(cmd, "--n");
    opts.has_radius = option_given(cmd, "--radius");
  }

  int status = 0;
  try {
    if (app.got_subcommand(constant)) {
      status = run_constant(opts);
    } else if (app.got_subcommand(bound)) {
      status = run_bound(opts);
    } else if (app.got_subcommand(kernel)) {
      status = run_kernel(opts, zeta_coords);
    } else if (app.got_subcommand(verify)) {
      status = run_verify(opts, suite, opts.has_radius);
    } else if (app.got_subcommand(table)) {
      status = run_table(opts, q_values, radius_count, radius_max);
    }
  } catch (const hypharm::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  // Timing goes to stderr so report bytes stay deterministic.
  std::cerr << "# elapsed_ms " << elapsed.count() << "\n";
  return status;
}
