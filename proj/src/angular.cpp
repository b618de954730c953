#include "salpeter/angular.hpp"

#include <cmath>
#include <numbers>

#include "salpeter/quadrature.hpp"

namespace salpeter {

double clebsch_gordan_half(int l, int m_l, int two_m_s, int two_j, int two_m) {
  if (l < 0) throw std::invalid_argument("clebsch_gordan_half: l must be >= 0");
  if (two_m_s != 1 && two_m_s != -1)
    throw std::invalid_argument("clebsch_gordan_half: m_s must be +-1/2");
  if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
    throw std::invalid_argument("clebsch_gordan_half: j must equal l +- 1/2");
  if (two_j < 1) throw std::invalid_argument("clebsch_gordan_half: j must be >= 1/2");
  if (std::abs(m_l) > l)
    throw std::invalid_argument("clebsch_gordan_half: |m_l| must not exceed l");
  if (two_m % 2 == 0) throw std::invalid_argument("clebsch_gordan_half: 2m must be odd");

  if (2 * m_l + two_m_s != two_m) return 0.0;
  if (std::abs(two_m) > two_j) return 0.0;

  // Condon-Shortley closed forms for coupling l with spin 1/2.
  const double denom = 2.0 * (2 * l + 1);
  const double plus = std::sqrt((2 * l + two_m + 1) / denom);   // sqrt((l+m+1/2)/(2l+1))
  const double minus = std::sqrt((2 * l - two_m + 1) / denom);  // sqrt((l-m+1/2)/(2l+1))
  if (two_j == 2 * l + 1) return two_m_s == 1 ? plus : minus;
  return two_m_s == 1 ? -minus : plus;
}

AngularBlock sigma_dot_L_plus_one_block(int two_j) {
  if (two_j < 1 || two_j % 2 == 0)
    throw std::invalid_argument("sigma_dot_L_plus_one_block: 2j must be a positive odd integer");
  AngularBlock block;
  block.two_j = two_j;
  block.label = "sigma.L+1";
  const double kappa = 0.5 * (two_j + 1);  // j + 1/2
  block.entries << kappa, 0, 0, -kappa;
  return block;
}

AngularBlock sigma_dot_er_block(int two_j) {
  if (two_j < 1 || two_j % 2 == 0)
    throw std::invalid_argument("sigma_dot_er_block: 2j must be a positive odd integer");
  AngularBlock block;
  block.two_j = two_j;
  block.label = "sigma.e_r";
  // Off-diagonal sign fixed to -1 by the quadrature oracle under the chosen
  // spinor-spherical-harmonic phases.
  block.entries << 0, -1, -1, 0;
  return block;
}

Eigen::Vector2cd spinor_spherical_harmonic(int l, int two_j, int two_m,
                                           double theta, double phi) {
  using namespace std::complex_literals;
  auto ylm = [&](int ll, int mm) -> std::complex<double> {
    if (std::abs(mm) > ll) return 0.0;
    if (mm >= 0) return std::sph_legendre(ll, mm, theta) * std::exp(1i * (mm * phi));
    double sign = (mm % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sph_legendre(ll, -mm, theta) * std::exp(1i * (mm * phi));
  };
  Eigen::Vector2cd out;
  const int m_l_up = (two_m - 1) / 2;    // m_s = +1/2
  const int m_l_down = (two_m + 1) / 2;  // m_s = -1/2
  out(0) = (std::abs(m_l_up) <= l ? clebsch_gordan_half(l, m_l_up, 1, two_j, two_m) : 0.0) *
           ylm(l, m_l_up);
  out(1) = (std::abs(m_l_down) <= l ? clebsch_gordan_half(l, m_l_down, -1, two_j, two_m) : 0.0) *
           ylm(l, m_l_down);
  return out;
}

QuadratureBlock sigma_dot_er_quadrature(int two_j, int grid_order) {
  if (two_j < 1 || two_j % 2 == 0)
    throw std::invalid_argument("sigma_dot_er_quadrature: 2j must be a positive odd integer");
  if (grid_order < 2)
    throw std::invalid_argument("sigma_dot_er_quadrature: grid order must be >= 2");

  QuadratureBlock result;
  result.block.two_j = two_j;
  result.block.label = "sigma.e_r (quadrature)";
  // Integrands are spherical polynomials of degree <= 2j + 2 in the angular
  // variables; this grid integrates them exactly, anything smaller is flagged.
  result.grid_adequate = grid_order >= two_j + 3;

  const int l0 = (two_j - 1) / 2;
  const int l1 = (two_j + 1) / 2;
  const int two_m = 1;
  const int n_phi = 2 * grid_order + 4;
  const auto& rule = legendre_rule(grid_order);

  Mat2 block = Mat2::Zero();
  for (int k = 0; k < rule.nodes.size(); ++k) {
    const double ct = rule.nodes(k);
    const double theta = std::acos(ct);
    const double st = std::sin(theta);
    for (int p = 0; p < n_phi; ++p) {
      const double phi = 2.0 * std::numbers::pi * p / n_phi;
      Mat2 er;
      er << ct, st * std::exp(std::complex<double>(0, -phi)),
            st * std::exp(std::complex<double>(0, phi)), -ct;
      const Eigen::Vector2cd omega0 = spinor_spherical_harmonic(l0, two_j, two_m, theta, phi);
      const Eigen::Vector2cd omega1 = spinor_spherical_harmonic(l1, two_j, two_m, theta, phi);
      const double w = rule.weights(k) * 2.0 * std::numbers::pi / n_phi;
      block(0, 0) += w * omega0.dot(er * omega0);
      block(0, 1) += w * omega0.dot(er * omega1);
      block(1, 0) += w * omega1.dot(er * omega0);
      block(1, 1) += w * omega1.dot(er * omega1);
    }
  }
  result.block.entries = block;
  return result;
}

AngularBlock lambda_block(int two_j, double alpha, CouplingSign sign) {
  if (alpha < 0.0) throw std::invalid_argument("lambda_block: alpha must be >= 0");
  if (alpha >= 0.5 * (two_j + 1))
    throw std::domain_error("lambda_block: alpha must be below j + 1/2");
  AngularBlock block;
  block.two_j = two_j;
  block.label = "Lambda";
  const std::complex<double> coupling(0.0, sign_factor(sign) * alpha);
  block.entries = -sigma_dot_L_plus_one_block(two_j).entries -
                  coupling * sigma_dot_er_block(two_j).entries;
  return block;
}

AngularBlock numerator_block(int two_j, double alpha, CouplingSign sign) {
  if (alpha < 0.0) throw std::invalid_argument("numerator_block: alpha must be >= 0");
  if (alpha >= 0.5 * (two_j + 1))
    throw std::domain_error("numerator_block: alpha must be below j + 1/2");
  AngularBlock block;
  block.two_j = two_j;
  block.label = "Lambda(Lambda+1)";
  const double l0 = 0.5 * (two_j - 1);
  const double l1 = 0.5 * (two_j + 1);
  Mat2 diag;
  diag << l0 * (l0 + 1.0), 0, 0, l1 * (l1 + 1.0);
  const std::complex<double> coupling(0.0, sign_factor(sign) * alpha);
  block.entries = diag - coupling * sigma_dot_er_block(two_j).entries -
                  alpha * alpha * Mat2::Identity();
  return block;
}

std::array<std::complex<double>, 2> channel_matched_eigenvalues(const Mat2& block) {
  Eigen::ComplexEigenSolver<Mat2> es(block);
  const auto& vecs = es.eigenvectors();
  // Assign each eigenpair to the channel its eigenvector leans on; this is
  // the continuity labeling from the decoupled alpha = 0 limit.
  const bool first_is_channel0 = std::abs(vecs(0, 0)) >= std::abs(vecs(0, 1));
  if (first_is_channel0) return {es.eigenvalues()(0), es.eigenvalues()(1)};
  return {es.eigenvalues()(1), es.eigenvalues()(0)};
}

}  // namespace salpeter
