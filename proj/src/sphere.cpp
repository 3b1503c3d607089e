#include "hypharm/sphere.hpp"

#include <cmath>
#include <string>

#include "hypharm/quadrature.hpp"

namespace hypharm {

namespace {

constexpr int kChunkSize = 4096;

double vector_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double c : v) acc += c * c;
  return std::sqrt(acc);
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DomainError(std::string(what) + ": dimension mismatch");
}

}  // namespace

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (dim() < 3) throw DomainError("UnitVector: dimension must be >= 3");
  const double norm = vector_norm(coords_);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("UnitVector: cannot normalize a zero or non-finite vector");
  }
  for (double& c : coords_) c /= norm;
}

UnitVector UnitVector::axis(int n, int index) {
  if (index < 0 || index >= n) throw DomainError("UnitVector::axis: index out of range");
  std::vector<double> coords(n, 0.0);
  coords[index] = 1.0;
  return UnitVector(std::move(coords));
}

BallPoint::BallPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (dim() < 3) throw DomainError("BallPoint: dimension must be >= 3");
  norm_ = vector_norm(coords_);
  if (!(norm_ < 1.0 - 1e-15)) {
    throw DomainError("BallPoint: point must lie strictly inside the unit ball");
  }
}

BallPoint BallPoint::origin(int n) {
  return BallPoint(std::vector<double>(n, 0.0));
}

BallPoint BallPoint::radial(double rho, const UnitVector& direction) {
  std::vector<double> coords(direction.coords());
  for (double& c : coords) c *= rho;
  return BallPoint(std::move(coords));
}

double dot(const UnitVector& u, const UnitVector& v) {
  require_same_dim(u.dim(), v.dim(), "dot");
  double acc = 0.0;
  for (int i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
  return acc;
}

double dot(const BallPoint& x, const UnitVector& v) {
  require_same_dim(x.dim(), v.dim(), "dot");
  double acc = 0.0;
  for (int i = 0; i < x.dim(); ++i) acc += x[i] * v[i];
  return acc;
}

double squared_distance(const BallPoint& x, const UnitVector& v) {
  require_same_dim(x.dim(), v.dim(), "squared_distance");
  double acc = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    const double d = x[i] - v[i];
    acc += d * d;
  }
  return acc;
}

QuadratureSpec QuadratureSpec::zonal(int nodes) {
  QuadratureSpec spec;
  spec.method = QuadratureMethod::ZonalGaussLegendre;
  spec.nodes = nodes;
  spec.validate();
  return spec;
}

QuadratureSpec QuadratureSpec::monte_carlo(int samples, std::uint64_t seed) {
  QuadratureSpec spec;
  spec.method = QuadratureMethod::MonteCarlo;
  spec.nodes = samples;
  spec.seed = seed;
  spec.validate();
  return spec;
}

void QuadratureSpec::validate() const {
  if (method == QuadratureMethod::ZonalGaussLegendre && nodes < 2) {
    throw DomainError("QuadratureSpec: zonal rule needs at least 2 nodes");
  }
  if (method == QuadratureMethod::MonteCarlo && nodes < 1) {
    throw DomainError("QuadratureSpec: Monte Carlo needs at least 1 sample");
  }
}

SphereSampler::SphereSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {
  if (n < 3) throw DomainError("SphereSampler: dimension must be >= 3");
}

double SphereSampler::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Top 53 bits; u1 shifted into (0, 1] so the log is finite.
  const double u1 = 1.0 - std::ldexp(static_cast<double>(rng_() >> 11), -53);
  const double u2 = std::ldexp(static_cast<double>(rng_() >> 11), -53);
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

void SphereSampler::next(std::vector<double>& out) {
  out.resize(n_);
  while (true) {
    double norm_sq = 0.0;
    for (int i = 0; i < n_; ++i) {
      out[i] = normal();
      norm_sq += out[i] * out[i];
    }
    const double norm = std::sqrt(norm_sq);
    if (norm > 1e-154) {
      for (int i = 0; i < n_; ++i) out[i] /= norm;
      return;
    }
  }
}

std::vector<UnitVector> uniform_sphere_sample(int n, int count, std::uint64_t seed) {
  if (count < 1) throw DomainError("uniform_sphere_sample: count must be >= 1");
  SphereSampler sampler(n, seed);
  std::vector<UnitVector> out;
  out.reserve(count);
  std::vector<double> buf;
  for (int i = 0; i < count; ++i) {
    sampler.next(buf);
    out.push_back(UnitVector(buf));
  }
  return out;
}

double surface_ratio(int n) {
  if (n < 2) throw DomainError("surface_ratio: dimension must be >= 2");
  return std::exp(std::lgamma(0.5 * n) - std::lgamma(0.5 * (n - 1))) / std::sqrt(M_PI);
}

double zonal_integral(int n, const std::function<double(double)>& g, int nodes) {
  if (n < 2) throw DomainError("zonal_integral: dimension must be >= 2");
  if (nodes < 2) throw DomainError("zonal_integral: nodes must be >= 2");
  const QuadratureRule& rule = gauss_legendre(nodes);
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double theta = 0.5 * M_PI * (rule.nodes[i] + 1.0);
    acc += rule.weights[i] * g(std::cos(theta)) * std::pow(std::sin(theta), n - 2);
  }
  return surface_ratio(n) * 0.5 * M_PI * acc;
}

UnitVector mobius_boundary_map(const BallPoint& x, const UnitVector& eta) {
  require_same_dim(x.dim(), eta.dim(), "mobius_boundary_map");
  const double scale = (1.0 - x.norm() * x.norm()) / squared_distance(x, eta);
  std::vector<double> out(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    out[i] = x[i] - scale * (eta[i] - x[i]);
  }
  return UnitVector(std::move(out));
}

double mobius_jacobian(const BallPoint& x, const UnitVector& eta) {
  require_same_dim(x.dim(), eta.dim(), "mobius_jacobian");
  const double one_minus = 1.0 - x.norm() * x.norm();
  return std::pow(one_minus / squared_distance(x, eta), x.dim() - 1);
}

MonteCarloEstimate monte_carlo_surface_integral(
    const std::function<double(const UnitVector&)>& f, int n, const QuadratureSpec& spec) {
  spec.validate();
  if (spec.method != QuadratureMethod::MonteCarlo) {
    throw MethodMismatch("monte_carlo_surface_integral: spec must request Monte Carlo");
  }
  SphereSampler sampler(n, spec.seed);
  std::vector<double> buf;
  double sum = 0.0;
  double sum_sq = 0.0;
  double chunk_sum = 0.0;
  double chunk_sum_sq = 0.0;
  int in_chunk = 0;
  for (int i = 0; i < spec.nodes; ++i) {
    sampler.next(buf);
    const double v = f(UnitVector(buf));
    chunk_sum += v;
    chunk_sum_sq += v * v;
    if (++in_chunk == kChunkSize) {
      sum += chunk_sum;
      sum_sq += chunk_sum_sq;
      chunk_sum = chunk_sum_sq = 0.0;
      in_chunk = 0;
    }
  }
  sum += chunk_sum;
  sum_sq += chunk_sum_sq;
  const double count = static_cast<double>(spec.nodes);
  const double mean = sum / count;
  const double variance = std::max(0.0, sum_sq / count - mean * mean);
  return {mean, std::sqrt(variance / count)};
}

MonteCarloVectorEstimate monte_carlo_surface_integral_vec(
    const std::function<std::vector<double>(const UnitVector&)>& f, int dim, int n,
    const QuadratureSpec& spec) {
  spec.validate();
  if (spec.method != QuadratureMethod::MonteCarlo) {
    throw MethodMismatch("monte_carlo_surface_integral_vec: spec must request Monte Carlo");
  }
  SphereSampler sampler(n, spec.seed);
  std::vector<double> buf;
  std::vector<double> sum(dim, 0.0);
  std::vector<double> sum_sq(dim, 0.0);
  std::vector<double> chunk_sum(dim, 0.0);
  std::vector<double> chunk_sum_sq(dim, 0.0);
  int in_chunk = 0;
  for (int i = 0; i < spec.nodes; ++i) {
    sampler.next(buf);
    const std::vector<double> v = f(UnitVector(buf));
    if (static_cast<int>(v.size()) != dim) {
      throw DomainError("monte_carlo_surface_integral_vec: integrand dimension mismatch");
    }
    for (int j = 0; j < dim; ++j) {
      chunk_sum[j] += v[j];
      chunk_sum_sq[j] += v[j] * v[j];
    }
    if (++in_chunk == kChunkSize) {
      for (int j = 0; j < dim; ++j) {
        sum[j] += chunk_sum[j];
        sum_sq[j] += chunk_sum_sq[j];
        chunk_sum[j] = chunk_sum_sq[j] = 0.0;
      }
      in_chunk = 0;
    }
  }
  for (int j = 0; j < dim; ++j) {
    sum[j] += chunk_sum[j];
    sum_sq[j] += chunk_sum_sq[j];
  }
  MonteCarloVectorEstimate est;
  est.value.resize(dim);
  est.std_error.resize(dim);
  const double count = static_cast<double>(spec.nodes);
  for (int j = 0; j < dim; ++j) {
    const double mean = sum[j] / count;
    const double variance = std::max(0.0, sum_sq[j] / count - mean * mean);
    est.value[j] = mean;
    est.std_error[j] = std::sqrt(variance / count);
  }
  return est;
}

}  // namespace hypharm
