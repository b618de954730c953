#include <doctest.h>

#include "salpeter/pauli.hpp"

using namespace salpeter;
using namespace std::complex_literals;

TEST_CASE("pauli matrices: hermiticity, trace, determinant") {
  for (int k = 1; k <= 3; ++k) {
    const Mat2 s = pauli(k);
    CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(s.trace()) == 0.0);
    CHECK(std::abs(s.determinant() + 1.0) == 0.0);
  }
  CHECK_THROWS_AS(pauli(0), std::invalid_argument);
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("product identity matches direct multiplication for all 9 pairs") {
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 3; ++j)
      CHECK((pauli_product(k, j) - pauli(k) * pauli(j)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sigma_dot is linear and reproduces components") {
  const Eigen::Vector3d a(0.3, -1.2, 2.0);
  Mat2 expected = a(0) * pauli(1) + a(1) * pauli(2) + a(2) * pauli(3);
  CHECK((sigma_dot(a) - expected).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::Vector3cd b(1.0 + 2.0i, -0.5i, 0.25);
  Mat2 expected_c = b(0) * pauli(1) + b(1) * pauli(2) + b(2) * pauli(3);
  CHECK((sigma_dot(b) - expected_c).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("(sigma.a)(sigma.b) = a.b + i sigma.(a x b) for real vectors") {
  const Eigen::Vector3d a(0.7, -0.2, 1.1), b(-1.0, 0.4, 0.9);
  const Mat2 lhs = sigma_dot(a) * sigma_dot(b);
  const Mat2 rhs = a.dot(b) * Mat2::Identity() +
                   1i * sigma_dot(Eigen::Vector3cd(a.cross(b).cast<std::complex<double>>()));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-15);
}
