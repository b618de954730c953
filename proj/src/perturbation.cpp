#include "salpeter/perturbation.hpp"

#include <cmath>
#include <stdexcept>

#include "salpeter/hydrogen.hpp"

namespace salpeter {

namespace {
double kappa_of(int two_j) {
  if (two_j < 1 || two_j % 2 == 0)
    throw std::invalid_argument("2j must be a positive odd integer");
  return 0.5 * (two_j + 1);  // j + 1/2
}
}  // namespace

double epsilon_exact(int two_j, double alpha) {
  const double kappa = kappa_of(two_j);
  if (alpha < 0.0) throw std::invalid_argument("epsilon_exact: alpha must be >= 0");
  if (alpha >= kappa) throw std::domain_error("epsilon_exact: alpha must be below j + 1/2");
  return alpha * alpha / (kappa + std::sqrt(kappa * kappa - alpha * alpha));
}

double epsilon_approx(int two_j, double alpha) {
  const double kappa = kappa_of(two_j);
  if (alpha < 0.0) throw std::invalid_argument("epsilon_approx: alpha must be >= 0");
  return alpha * alpha / (2.0 * kappa);
}

EpsilonResult epsilon(int two_j, double alpha) {
  return {epsilon_exact(two_j, alpha), epsilon_approx(two_j, alpha), two_j, alpha};
}

double lambda_value(int l, int two_j, double alpha) {
  if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
    throw std::invalid_argument("lambda_value: j must equal l +- 1/2");
  return l - epsilon_exact(two_j, alpha);
}

double centrifugal_approx(int l, int two_j, double alpha) {
  if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
    throw std::invalid_argument("centrifugal_approx: j must equal l +- 1/2");
  return l * (l + 1.0) - alpha * alpha * (l + 0.5) / kappa_of(two_j);
}

double delta_E10(int n, int l, const PhysicalParams& params) {
  if (n < 1 || l < 0 || l > n - 1)
    throw std::invalid_argument("delta_E10: need 0 <= l <= n-1");
  params.validate();
  const double e_n = energy_nonrel(n, params);
  const double a2 = params.alpha * params.alpha;
  const double closed = e_n * (a2 / (n * n)) * (n / (l + 0.5) - 0.75);
  const double composed = delta_E10_operator_route(n, l, params);
  if (std::abs(closed - composed) > 1e-13 * std::abs(closed))
    throw std::logic_error("delta_E10: operator route disagrees with the closed form");
  return closed;
}

double delta_E10_operator_route(int n, int l, const PhysicalParams& params) {
  if (n < 1 || l < 0 || l > n - 1)
    throw std::invalid_argument("delta_E10_operator_route: need 0 <= l <= n-1");
  params.validate();
  const double e_n = energy_nonrel(n, params);
  const double mean_V = -params.alpha * expectation_inv_r(n, params);
  const double mean_V2 = params.alpha * params.alpha * expectation_inv_r2(n, l, params);
  // <(p^2/2m)^2> = <(H0 - V)^2> = E_n^2 - 2 E_n <V> + <V^2>
  return -(e_n * e_n - 2.0 * e_n * mean_V + mean_V2) / (2.0 * params.mass);
}

double delta_E11(int n, int l, int two_j, const PhysicalParams& params) {
  if (n < 1 || l < 0 || l > n - 1)
    throw std::invalid_argument("delta_E11: need 0 <= l <= n-1");
  if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
    throw std::invalid_argument("delta_E11: j must equal l +- 1/2");
  if (two_j < 1) throw std::invalid_argument("delta_E11: j must be >= 1/2");
  params.validate();
  const double e_n = energy_nonrel(n, params);
  const double a2 = params.alpha * params.alpha;
  return e_n * (a2 / n) * (1.0 / kappa_of(two_j) - 1.0 / (l + 0.5));
}

double energy_alpha4(int n, int two_j, const PhysicalParams& params) {
  if (n < 1) throw std::invalid_argument("energy_alpha4: n must be >= 1");
  const double kappa = kappa_of(two_j);
  if (two_j > 2 * n - 1) throw std::invalid_argument("energy_alpha4: j must not exceed n - 1/2");
  params.validate();
  const double e_n = energy_nonrel(n, params);
  const double a2 = params.alpha * params.alpha;
  return e_n * (1.0 - (a2 / (n * n)) * (0.75 - n / kappa));
}

EnergyBreakdown breakdown(const QuantumNumbers& qn, CouplingSign sign,
                          const PhysicalParams& params) {
  qn.validate();
  EnergyBreakdown out;
  out.qn = qn;
  out.sign = sign;
  out.e_n = energy_nonrel(qn.n, params);
  out.delta_e10 = delta_E10(qn.n, qn.l, params);
  out.delta_e11 = delta_E11(qn.n, qn.l, qn.two_j, params);
  out.total = out.e_n + out.delta_e10 + out.delta_e11;
  return out;
}

}  // namespace salpeter
