#pragma once

#include <array>
#include <complex>
#include <string>

#include "salpeter/pauli.hpp"
#include "salpeter/types.hpp"

namespace salpeter {

// 2x2 operator block over the channel pair (l = j-1/2, l = j+1/2) at fixed
// (j, m). Channel 0 is always l = j-1/2; every block and solver in the
// project shares that ordering.
struct AngularBlock {
  int two_j = 1;
  Mat2 entries = Mat2::Zero();
  std::string label;

  int channel_l(int channel) const {
    return channel == 0 ? (two_j - 1) / 2 : (two_j + 1) / 2;
  }
};

// <l m_l; 1/2 m_s | j m> in the Condon-Shortley convention. Violated
// selection rules give exactly 0; malformed quantum numbers throw.
double clebsch_gordan_half(int l, int m_l, int two_m_s, int two_j, int two_m);

// Diagonal block of sigma.L + 1: diag(+(j+1/2), -(j+1/2)).
AngularBlock sigma_dot_L_plus_one_block(int two_j);

// Block of sigma.e_r over the channel pair: [[0,-1],[-1,0]], an involution
// that anticommutes with sigma.L + 1.
AngularBlock sigma_dot_er_block(int two_j);

// Same matrix computed by explicit quadrature over the sphere of the spinor
// spherical harmonics; the independent oracle for sigma_dot_er_block.
struct QuadratureBlock {
  AngularBlock block;
  bool grid_adequate = true;
};
QuadratureBlock sigma_dot_er_quadrature(int two_j, int grid_order);

// Lambda = -(sigma.L + 1) -+ i alpha sigma.e_r. Non-Hermitian but with real
// spectrum -+sqrt((j+1/2)^2 - alpha^2) for alpha < j+1/2.
AngularBlock lambda_block(int two_j, double alpha, CouplingSign sign);

// Lambda(Lambda + 1) assembled directly: diag(l0(l0+1), l1(l1+1))
// -+ i alpha sigma.e_r - alpha^2.
AngularBlock numerator_block(int two_j, double alpha, CouplingSign sign);

// Eigenvalues of a 2x2 block assigned to channels by eigenvector overlap
// with the channel basis (continuity from alpha = 0), not by sorting.
std::array<std::complex<double>, 2> channel_matched_eigenvalues(const Mat2& block);

// Spinor spherical harmonic Omega_{j l m}(theta, phi) as a 2-component
// complex vector; building block of the quadrature oracle.
Eigen::Vector2cd spinor_spherical_harmonic(int l, int two_j, int two_m,
                                           double theta, double phi);

}  // namespace salpeter
