#include "salpeter/reference.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "salpeter/hydrogen.hpp"
#include "salpeter/perturbation.hpp"

namespace salpeter {

namespace {
void require_state(int n, int two_j, const PhysicalParams& params) {
  params.validate();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (two_j < 1 || two_j % 2 == 0)
    throw std::invalid_argument("2j must be a positive odd integer");
  if (two_j > 2 * n - 1) throw std::invalid_argument("j must not exceed n - 1/2");
  if (params.alpha >= 0.5 * (two_j + 1))
    throw std::domain_error("alpha must be below j + 1/2");
}

// m (1/sqrt(1+x) - 1) without cancellation.
double binding_from_ratio(double mass, double x) {
  const double s = std::sqrt(1.0 + x);
  return -mass * x / (s * (1.0 + s));
}
}  // namespace

double dirac_energy(int n, int two_j, const PhysicalParams& params) {
  require_state(n, two_j, params);
  const double neff = n - epsilon_exact(two_j, params.alpha);
  return params.mass / std::sqrt(1.0 + params.alpha * params.alpha / (neff * neff));
}

double dirac_binding(int n, int two_j, const PhysicalParams& params) {
  require_state(n, two_j, params);
  const double neff = n - epsilon_exact(two_j, params.alpha);
  return binding_from_ratio(params.mass, params.alpha * params.alpha / (neff * neff));
}

DiracCheck dirac_binding_alpha4_check(int n, int two_j, const PhysicalParams& params) {
  DiracCheck out;
  out.binding = dirac_binding(n, two_j, params);
  out.deviation_from_alpha4 = out.binding - energy_alpha4(n, two_j, params);
  return out;
}

CorrectionBudget pauli_dirac_budget(int n, int l, int two_j, const PhysicalParams& params) {
  QuantumNumbers::make(n, l, two_j, 1);  // validates the triple
  params.validate();
  const double m = params.mass;
  const double a0 = bohr_radius(params);

  CorrectionBudget budget;
  budget.kinetic = delta_E10(n, l, params);
  if (l == 0) {
    // (1/8m^2) <lap V> = (alpha/8m^2) 4 pi |psi(0)|^2 with |psi_{n00}(0)|^2
    // = 1/(pi n^3 a0^3)
    budget.darwin = params.alpha / (2.0 * m * m * n * n * n * a0 * a0 * a0);
  } else {
    const double j = 0.5 * two_j;
    const double sigma_dot_L = j * (j + 1.0) - l * (l + 1.0) - 0.75;
    budget.spin_orbit = params.alpha / (4.0 * m * m) *
                        expectation_inv_r3(n, l, params) * sigma_dot_L;
  }
  budget.total_shift = budget.kinetic + budget.darwin + budget.spin_orbit;
  return budget;
}

double kg_analytic_energy(const KGChannel& channel, const PhysicalParams& params) {
  channel.validate();
  params.validate();
  if (params.alpha >= 0.5 * (channel.two_j + 1))
    throw std::domain_error("kg_analytic_energy: alpha must be below j + 1/2");
  const double lambda = lambda_value(channel.l, channel.two_j, params.alpha);
  const double N = channel.n_r + lambda + 1.0;
  return params.mass / std::sqrt(1.0 + params.alpha * params.alpha / (N * N));
}

double kg_analytic_binding(const KGChannel& channel, const PhysicalParams& params) {
  channel.validate();
  params.validate();
  if (params.alpha >= 0.5 * (channel.two_j + 1))
    throw std::domain_error("kg_analytic_binding: alpha must be below j + 1/2");
  const double lambda = lambda_value(channel.l, channel.two_j, params.alpha);
  const double N = channel.n_r + lambda + 1.0;
  return binding_from_ratio(params.mass, params.alpha * params.alpha / (N * N));
}

KGIterativeResult kg_iterative_solve(const KGChannel& channel, const PhysicalParams& params,
                                     int basis_size, double beta, double initial_energy) {
  channel.validate();
  params.validate();
  if (basis_size < 40)
    throw std::invalid_argument("kg_iterative_solve: basis size must be >= 40");
  if (params.alpha >= 0.5 * (channel.two_j + 1))
    throw std::domain_error("kg_iterative_solve: alpha must be below j + 1/2");

  const double m = params.mass;
  const double alpha = params.alpha;
  const double lambda = lambda_value(channel.l, channel.two_j, alpha);
  const double c = lambda * (lambda + 1.0);
  if (beta <= 0.0) beta = m * alpha / (channel.n_r + lambda + 1.0);

  const RadialBasis basis = build_basis(c, beta, basis_size);
  const Eigen::MatrixXd p2 = p2_matrix(basis).entries;
  const Eigen::MatrixXd inv_r = -coulomb_matrix(basis, 1.0).entries;  // +1/r matrix

  double energy = initial_energy > 0.0 ? initial_energy : m;
  const double tol = 1e-12 * m;
  for (int iteration = 1; iteration <= 200; ++iteration) {
    Eigen::MatrixXd op = p2 - 2.0 * energy * alpha * inv_r;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op);
    const double mu = es.eigenvalues()(channel.n_r);
    if (mu + m * m < 0.0)
      throw std::domain_error("kg_iterative_solve: channel is unbound (mu + m^2 < 0)");
    const double next = std::sqrt(m * m + mu);
    const double delta = std::abs(next - energy);
    energy = next;
    if (delta <= tol) return {energy, iteration, delta};
  }
  throw ConvergenceError("kg_iterative_solve: no convergence in 200 iterations");
}

}  // namespace salpeter
