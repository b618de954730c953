#include "salpeter/hydrogen.hpp"

#include <cmath>
#include <stdexcept>

#include "salpeter/quadrature.hpp"

namespace salpeter {

double bohr_radius(const PhysicalParams& params) {
  params.validate();
  return 1.0 / (params.mass * params.alpha);
}

double energy_nonrel(int n, const PhysicalParams& params) {
  params.validate();
  if (n < 1) throw std::invalid_argument("energy_nonrel: n must be >= 1");
  return -params.mass * params.alpha * params.alpha / (2.0 * n * n);
}

double radial_R(const RadialState& state, double r) {
  if (r < 0.0) throw std::invalid_argument("radial_R: r must be >= 0");
  state.qn.validate();
  state.params.validate();
  const int n = state.qn.n;
  const int l = state.qn.l;
  const double a0 = bohr_radius(state.params);
  const double x = 2.0 * r / (n * a0);
  // sqrt((2/(n a0))^3 (n-l-1)! / (2n (n+l)!))
  const double log_norm = 1.5 * std::log(2.0 / (n * a0)) +
                          0.5 * (std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1));
  return std::exp(log_norm) * std::pow(x, l) * std::exp(-0.5 * x) *
         laguerre(n - l - 1, 2 * l + 1, x);
}

double expectation_inv_r(int n, const PhysicalParams& params) {
  if (n < 1) throw std::invalid_argument("expectation_inv_r: n must be >= 1");
  const double a0 = bohr_radius(params);
  return 1.0 / (a0 * n * n);
}

double expectation_inv_r2(int n, int l, const PhysicalParams& params) {
  if (n < 1 || l < 0 || l > n - 1)
    throw std::invalid_argument("expectation_inv_r2: need 0 <= l <= n-1");
  const double a0 = bohr_radius(params);
  return 1.0 / (a0 * a0 * n * n * n * (l + 0.5));
}

double expectation_inv_r3(int n, int l, const PhysicalParams& params) {
  if (n < 1 || l > n - 1) throw std::invalid_argument("expectation_inv_r3: need 0 <= l <= n-1");
  if (l < 1) throw std::domain_error("expectation_inv_r3: diverges for l = 0");
  const double a0 = bohr_radius(params);
  return 1.0 / (std::pow(a0, 3) * n * n * n * l * (l + 0.5) * (l + 1.0));
}

double expectation_r_power_quadrature(const RadialState& state, int k) {
  state.qn.validate();
  state.params.validate();
  const int n = state.qn.n;
  const int l = state.qn.l;
  if (k <= -(2 * l + 3))
    throw std::domain_error("expectation_r_power_quadrature: <r^k> not integrable");

  // With x = 2r/(n a0) the density becomes x^{2l+2} e^{-x} times the square
  // of a degree n-l-1 polynomial; fold r^k into the weight and the rule is
  // exact up to rounding.
  const double a0 = bohr_radius(state.params);
  const double scale = 0.5 * n * a0;  // r = scale * x
  const double weight_exp = 2.0 * l + 2.0 + k;
  const int nodes = 2 * n + std::abs(k) + 10;
  const auto& rule = laguerre_rule(nodes, weight_exp);

  const double log_norm = 1.5 * std::log(2.0 / (n * a0)) +
                          0.5 * (std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1));
  const double prefactor = std::exp(2.0 * log_norm) * std::pow(scale, 3 + k);
  double sum = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i) {
    const double p = laguerre(n - l - 1, 2 * l + 1, rule.nodes(i));
    sum += rule.weights(i) * p * p;
  }
  return prefactor * sum;
}

double alpha_scaling_exponent(int n, int l, int k, const std::vector<double>& alpha_grid) {
  if (alpha_grid.size() < 3)
    throw std::invalid_argument("alpha_scaling_exponent: need at least 3 alpha values");
  for (size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 0.0 && alpha_grid[i] < 1.0))
      throw std::invalid_argument("alpha_scaling_exponent: alphas must lie in (0, 1)");
    for (size_t j = 0; j < i; ++j)
      if (alpha_grid[i] == alpha_grid[j])
        throw std::invalid_argument("alpha_scaling_exponent: degenerate alpha grid");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double alpha : alpha_grid) {
    RadialState state{QuantumNumbers::make(n, l, 2 * l + 1, 1), PhysicalParams{1.0, alpha}};
    const double x = std::log(alpha);
    const double y = std::log(expectation_r_power_quadrature(state, k));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double count = static_cast<double>(alpha_grid.size());
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace salpeter
