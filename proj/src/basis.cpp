#include "salpeter/basis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "salpeter/quadrature.hpp"

namespace salpeter {

namespace {

// D_i(x) e^{-x/2} with D_i = (nu+1-x/2) g_i + x g_i', the polynomial part of
// du_i/dx; uses x g_i' = i g_i - sqrt(i(i+a)) g_{i-1}.
Eigen::MatrixXd derivative_combination(const Eigen::MatrixXd& h, const Eigen::VectorXd& x,
                                       double nu, double a) {
  Eigen::MatrixXd d(h.rows(), h.cols());
  for (int i = 0; i < h.cols(); ++i) {
    d.col(i) = (Eigen::ArrayXd::Constant(h.rows(), nu + 1.0 + i) - 0.5 * x.array()) *
               h.col(i).array();
    if (i > 0) d.col(i) -= std::sqrt(i * (i + a)) * h.col(i - 1);
  }
  return d;
}

// Rows scaled by sqrt(w e^x); together with the e^{-x/2}-scaled basis values
// this reproduces sum_k w_k f_i(x_k) f_j(x_k) without under/overflow.
Eigen::MatrixXd weighted(const Eigen::MatrixXd& values, const LaguerreRule& rule) {
  return rule.sqrt_scaled_weights.asDiagonal() * values;
}

}  // namespace

RadialBasis build_basis(double c, double beta, int N) {
  if (c < -0.25) throw std::domain_error("build_basis: centrifugal coefficient below -1/4");
  if (!(beta > 0.0)) throw std::invalid_argument("build_basis: beta must be positive");
  if (N < 2) throw std::invalid_argument("build_basis: need at least 2 functions");

  const double nu = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * c));
  const double a = 2.0 * nu + 2.0;

  int size = N;
  while (true) {
    const auto& rule = laguerre_rule(quadrature_nodes(size), a);
    const Eigen::MatrixXd phi = weighted(laguerre_ortho_scaled(rule.nodes, a, size), rule);
    // Gram of the raw functions in r carries a global 1/(2 beta) from dr.
    const Eigen::MatrixXd gram = (phi.transpose() * phi) / (2.0 * beta);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const double cond = es.eigenvalues()(size - 1) / es.eigenvalues()(0);
    if (cond > 1e12 && size > 2) {
      size -= std::max(1, size / 10);
      continue;
    }
    RadialBasis basis;
    basis.spec = {size, beta, c, nu};
    basis.gram_condition = cond;
    basis.conditioned = (size == N);
    basis.transform = es.eigenvectors() *
                      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().transpose();
    return basis;
  }
}

OperatorMatrix p2_matrix(const RadialBasis& basis) {
  const int N = basis.spec.size;
  const double nu = basis.spec.exponent;
  const double a = 2.0 * nu + 2.0;
  const double beta = basis.spec.beta;
  if (!(2.0 * nu > -1.0))
    throw std::domain_error("p2_matrix: centrifugal channel too singular for quadrature");

  const auto& rule = laguerre_rule(quadrature_nodes(N), 2.0 * nu);
  const Eigen::MatrixXd h = laguerre_ortho_scaled(rule.nodes, a, N);
  const Eigen::MatrixXd psi = weighted(derivative_combination(h, rule.nodes, nu, a), rule);
  const Eigen::MatrixXd phi = weighted(h, rule);

  // int u_i' u_j' dr + c int u_i u_j / r^2 dr, both reduced to the x^{2nu}
  // weight after the substitution x = 2 beta r.
  Eigen::MatrixXd raw = 2.0 * beta *
      (psi.transpose() * psi + basis.spec.centrifugal * phi.transpose() * phi);

  OperatorMatrix out;
  out.basis = basis.spec;
  out.label = "P2";
  out.entries = basis.transform.transpose() * raw * basis.transform;
  out.entries = 0.5 * (out.entries + out.entries.transpose()).eval();
  if (!out.entries.allFinite()) throw std::runtime_error("p2_matrix: quadrature over/underflow");
  return out;
}

OperatorMatrix coulomb_matrix(const RadialBasis& basis, double alpha) {
  const int N = basis.spec.size;
  const double nu = basis.spec.exponent;
  const double a = 2.0 * nu + 2.0;
  if (!(2.0 * nu + 1.0 > -1.0))
    throw std::domain_error("coulomb_matrix: 1/r not integrable for this channel");

  const auto& rule = laguerre_rule(quadrature_nodes(N), 2.0 * nu + 1.0);
  const Eigen::MatrixXd phi = weighted(laguerre_ortho_scaled(rule.nodes, a, N), rule);
  Eigen::MatrixXd raw = -alpha * (phi.transpose() * phi);

  OperatorMatrix out;
  out.basis = basis.spec;
  out.label = "COULOMB";
  out.entries = basis.transform.transpose() * raw * basis.transform;
  out.entries = 0.5 * (out.entries + out.entries.transpose()).eval();
  if (!out.entries.allFinite())
    throw std::runtime_error("coulomb_matrix: quadrature over/underflow");
  return out;
}

OperatorMatrix sqrt_operator(const OperatorMatrix& p2, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("sqrt_operator: mass must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p2.entries);
  if (es.eigenvalues()(0) < -1e-10)
    throw std::runtime_error("sqrt_operator: operand is not positive semidefinite");

  Eigen::VectorXd mapped = (es.eigenvalues().cwiseMax(0.0).array() + mass * mass).sqrt();
  OperatorMatrix out;
  out.basis = p2.basis;
  out.label = "SQRT_KINETIC";
  out.entries = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
  out.entries = 0.5 * (out.entries + out.entries.transpose()).eval();
  return out;
}

}  // namespace salpeter
