#pragma once

#include <Eigen/Dense>
#include <string>

#include "salpeter/types.hpp"

namespace salpeter {

// Reduced-radial Laguerre basis u_i(r) ~ (2 b r)^{nu+1} e^{-b r}
// L_i^{(2nu+2)}(2 b r) with nu = (-1 + sqrt(1+4c))/2 matched to the
// centrifugal coefficient c of the channel.
struct RadialBasisSpec {
  int size = 0;
  double beta = 1.0;        // inverse-length scale
  double centrifugal = 0.0; // coefficient c of 1/r^2
  double exponent = 0.0;    // nu
};

struct RadialBasis {
  RadialBasisSpec spec;
  // Symmetric orthonormalizing transform: an operator matrix A computed in
  // the raw Laguerre basis becomes transform^T A transform.
  Eigen::MatrixXd transform;
  double gram_condition = 1.0;
  bool conditioned = true;  // false if N had to be reduced by the guard
};

// Throws std::domain_error for c < -1/4 (fall to the center).
RadialBasis build_basis(double c, double beta, int N);

struct OperatorMatrix {
  Eigen::MatrixXd entries;  // dense symmetric, orthonormal basis
  RadialBasisSpec basis;
  std::string label;
};

// -d^2/dr^2 + c/r^2 on the reduced-radial basis, assembled in the symmetric
// first-derivative form with exact analytic derivatives under generalized
// Gauss-Laguerre quadrature (3N + 20 nodes).
OperatorMatrix p2_matrix(const RadialBasis& basis);

// -alpha / r.
OperatorMatrix coulomb_matrix(const RadialBasis& basis, double alpha);

// Operator square root by symmetric eigendecomposition:
// p2 = Q D Q^T  ->  Q sqrt(m^2 + D) Q^T. Eigenvalues below -1e-10 signal a
// broken positive-semidefinite input and throw.
OperatorMatrix sqrt_operator(const OperatorMatrix& p2, double mass);

// Number of quadrature nodes used for a basis of size N.
inline int quadrature_nodes(int N) { return 3 * N + 20; }

}  // namespace salpeter
