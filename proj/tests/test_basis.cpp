#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "salpeter/basis.hpp"
#include "salpeter/quadrature.hpp"

using namespace salpeter;

TEST_CASE("basis exponent nu solves nu(nu+1) = c") {
  CHECK(build_basis(0.0, 1.0, 4).spec.exponent == 0.0);
  CHECK(build_basis(2.0, 1.0, 4).spec.exponent == doctest::Approx(1.0).epsilon(1e-15));
  // c = 1 - sqrt(3)/2 - 1/4... frozen: c = 0.1339745962155614 from the
  // j=1/2 lower channel at alpha = 0.5
  CHECK(build_basis(0.1339745962155614, 1.0, 4).spec.exponent ==
        doctest::Approx(0.11965683746373795).epsilon(1e-14));
  CHECK_THROWS_AS(build_basis(-0.3, 1.0, 4), std::domain_error);
  CHECK_THROWS_AS(build_basis(0.0, 0.0, 4), std::invalid_argument);
}

TEST_CASE("orthonormalizing transform: T^T G T = identity") {
  for (double c : {0.0, 0.7}) {
    const RadialBasis basis = build_basis(c, 0.3, 40);
    // rebuild the Gram the same way the matrix elements are built
    const double nu = basis.spec.exponent;
    const double a = 2.0 * nu + 2.0;
    const auto& rule = laguerre_rule(quadrature_nodes(basis.spec.size), a);
    const Eigen::MatrixXd phi =
        rule.sqrt_scaled_weights.asDiagonal() *
        laguerre_ortho_scaled(rule.nodes, a, basis.spec.size);
    const Eigen::MatrixXd gram = (phi.transpose() * phi) / (2.0 * basis.spec.beta);
    const Eigen::MatrixXd overlap = basis.transform.transpose() * gram * basis.transform;
    CHECK((overlap - Eigen::MatrixXd::Identity(overlap.rows(), overlap.cols()))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("single-function analytic elements: p2 = beta^2, coulomb = -beta") {
  for (double beta : {1.0, 0.35}) {
    const RadialBasis basis = build_basis(0.0, beta, 2);
    CHECK(p2_matrix(basis).entries(0, 0) == doctest::Approx(beta * beta).epsilon(1e-12));
    CHECK(coulomb_matrix(basis, 1.0).entries(0, 0) == doctest::Approx(-beta).epsilon(1e-12));
  }
}

TEST_CASE("p2/2 - 1/r reproduces hydrogen levels -1/(2n^2)") {
  const RadialBasis basis = build_basis(0.0, 0.5, 60);
  const Eigen::MatrixXd h =
      0.5 * p2_matrix(basis).entries + coulomb_matrix(basis, 1.0).entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  for (int n = 1; n <= 3; ++n)
    CHECK(es.eigenvalues()(n - 1) == doctest::Approx(-0.5 / (n * n)).epsilon(2e-8));
}

TEST_CASE("l=1 channel: c=2 basis gives the 2p, 3p levels") {
  const RadialBasis basis = build_basis(2.0, 0.25, 60);
  const Eigen::MatrixXd h =
      0.5 * p2_matrix(basis).entries + coulomb_matrix(basis, 1.0).entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-0.125).epsilon(1e-8));
  CHECK(es.eigenvalues()(1) == doctest::Approx(-1.0 / 18.0).epsilon(1e-8));
}

TEST_CASE("sqrt_operator squares back to m^2 + p2") {
  const RadialBasis basis = build_basis(0.1339745962155614, 0.05, 80);
  const OperatorMatrix p2 = p2_matrix(basis);
  const OperatorMatrix root = sqrt_operator(p2, 1.0);
  const Eigen::MatrixXd target =
      p2.entries + Eigen::MatrixXd::Identity(p2.entries.rows(), p2.entries.cols());
  const double rel = (root.entries * root.entries - target).cwiseAbs().maxCoeff() /
                     target.cwiseAbs().maxCoeff();
  CHECK(rel <= 1e-11);
}

TEST_CASE("sqrt_operator of the zero operator is m * identity") {
  OperatorMatrix zero;
  zero.entries = Eigen::MatrixXd::Zero(5, 5);
  const OperatorMatrix root = sqrt_operator(zero, 2.5);
  CHECK((root.entries - 2.5 * Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() <= 1e-14);
  OperatorMatrix bad;
  bad.entries = -Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(sqrt_operator(bad, 1.0), std::runtime_error);
}

TEST_CASE("quadrature rules: moments of the Laguerre weight") {
  // int x^a e^-x x^k dx = Gamma(a+k+1)
  const auto& rule = laguerre_rule(20, 1.5);
  double m0 = 0.0, m1 = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i) {
    m0 += rule.weights(i);
    m1 += rule.weights(i) * rule.nodes(i);
  }
  CHECK(m0 == doctest::Approx(std::tgamma(2.5)).epsilon(1e-13));
  CHECK(m1 == doctest::Approx(std::tgamma(3.5)).epsilon(1e-13));

  const auto& leg = legendre_rule(12);
  double s0 = 0.0, s2 = 0.0;
  for (int i = 0; i < leg.nodes.size(); ++i) {
    s0 += leg.weights(i);
    s2 += leg.weights(i) * leg.nodes(i) * leg.nodes(i);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}
