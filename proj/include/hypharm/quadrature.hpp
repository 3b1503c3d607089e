#pragma once

#include <vector>

namespace hypharm {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1], nodes ascending. Cached per node count;
// safe for concurrent callers.
const QuadratureRule& gauss_legendre(int n);

// Gauss-Legendre rule affinely mapped onto [lo, hi].
QuadratureRule gauss_legendre_on(double lo, double hi, int n);

// Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1. The weight function is absorbed into the weights.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

}  // namespace hypharm
