#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace salpeter {

using Mat2 = Eigen::Matrix2cd;

// Pauli matrix sigma_k, k in {1,2,3}.
inline Mat2 pauli(int k) {
  using namespace std::complex_literals;
  Mat2 s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -1i, 1i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: axis index must be 1, 2 or 3");
  }
  return s;
}

// sigma_k sigma_j = delta_kj 1 + i sum_l eps_kjl sigma_l, assembled from the
// right-hand side so that it is exact in small-integer arithmetic.
inline Mat2 pauli_product(int k, int j) {
  if (k < 1 || k > 3 || j < 1 || j > 3)
    throw std::invalid_argument("pauli_product: axis indices must be in 1..3");
  using namespace std::complex_literals;
  Mat2 out = Mat2::Zero();
  if (k == j) return Mat2::Identity();
  // eps_kjl is +-1 for the single l completing the permutation
  int l = 6 - k - j;
  int eps = ((j - k + 3) % 3 == 1) ? 1 : -1;
  out = 1i * double(eps) * pauli(l);
  return out;
}

// sigma . v for a complex 3-vector v.
inline Mat2 sigma_dot(const Eigen::Vector3cd& v) {
  return v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3);
}

inline Mat2 sigma_dot(const Eigen::Vector3d& v) {
  return sigma_dot(Eigen::Vector3cd(v.cast<std::complex<double>>()));
}

}  // namespace salpeter
