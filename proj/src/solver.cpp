#include "salpeter/solver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "salpeter/angular.hpp"
#include "salpeter/hydrogen.hpp"
#include "salpeter/perturbation.hpp"
#include "salpeter/reference.hpp"

namespace salpeter {

const char* method_name(Method m) {
  switch (m) {
    case Method::NonRel: return "NONREL";
    case Method::Perturbative: return "PERTURBATIVE";
    case Method::Dirac: return "DIRAC";
    case Method::KG: return "KG";
    case Method::SqrtSolver: return "SQRT_SOLVER";
  }
  return "UNKNOWN";
}

namespace {

// Total energies of sqrt(m^2 + p2) - alpha/r on the channel basis.
Eigen::VectorXd channel_energies(double c, const PhysicalParams& params, int N, double beta,
                                 RadialBasisSpec* spec_out = nullptr) {
  const RadialBasis basis = build_basis(c, beta, N);
  if (spec_out) *spec_out = basis.spec;
  const OperatorMatrix kinetic = sqrt_operator(p2_matrix(basis), params.mass);
  const Eigen::MatrixXd h = kinetic.entries + coulomb_matrix(basis, params.alpha).entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  return es.eigenvalues();
}

double channel_centrifugal(int two_j, int branch, CouplingSign sign, double alpha) {
  const auto eigen = channel_matched_eigenvalues(numerator_block(two_j, alpha, sign).entries);
  const std::complex<double> lam_lam1 = eigen[branch];
  if (std::abs(lam_lam1.imag()) > 1e-10)
    throw std::runtime_error("solve_channel: numerator-block eigenvalue is not real");
  return lam_lam1.real() + alpha * alpha;
}

std::vector<SpectrumEntry> entries_from_energies(const Eigen::VectorXd& energies, int l,
                                                 int two_j, CouplingSign sign,
                                                 const PhysicalParams& params,
                                                 const RadialBasisSpec& spec) {
  std::vector<SpectrumEntry> out;
  for (int i = 0; i < energies.size(); ++i) {
    if (!(energies(i) < params.mass)) break;  // ascending; bound states only
    SpectrumEntry e;
    e.method = Method::SqrtSolver;
    e.l = l;
    e.two_j = two_j;
    e.n = l + 1 + static_cast<int>(out.size());
    e.alpha = params.alpha;
    e.binding = energies(i) - params.mass;
    e.sign = sign;
    e.basis_meta = spec;
    out.push_back(e);
  }
  return out;
}

}  // namespace

double tune_beta(double c, const PhysicalParams& params, int N, int level) {
  params.validate();
  const double center = params.mass * params.alpha;
  double best_beta = center;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 15; ++i) {
    const double factor = std::exp(-1.6 + 3.2 * i / 14.0);
    const double beta = center * factor;
    const Eigen::VectorXd energies = channel_energies(c, params, N, beta);
    if (level >= energies.size()) continue;
    if (energies(level) < best_value) {
      best_value = energies(level);
      best_beta = beta;
    }
  }
  return best_beta;
}

std::vector<SpectrumEntry> solve_channel(int two_j, int branch, CouplingSign sign,
                                         const PhysicalParams& params, int N, double beta,
                                         int tune_level) {
  params.validate();
  if (branch != 0 && branch != 1)
    throw std::invalid_argument("solve_channel: branch must be 0 or 1");
  if (params.alpha >= 0.5 * (two_j + 1))
    throw std::domain_error("solve_channel: alpha must be below j + 1/2");
  const double c = channel_centrifugal(two_j, branch, sign, params.alpha);
  if (beta <= 0.0) beta = tune_beta(c, params, N, tune_level);
  RadialBasisSpec spec;
  const Eigen::VectorXd energies = channel_energies(c, params, N, beta, &spec);
  const int l = branch == 0 ? (two_j - 1) / 2 : (two_j + 1) / 2;
  return entries_from_energies(energies, l, two_j, sign, params, spec);
}

std::vector<SpectrumEntry> solve_spinless(int l, const PhysicalParams& params, int N,
                                          double beta, int tune_level) {
  params.validate();
  if (l < 0) throw std::invalid_argument("solve_spinless: l must be >= 0");
  const double c = static_cast<double>(l) * (l + 1);
  if (beta <= 0.0) beta = tune_beta(c, params, N, tune_level);
  RadialBasisSpec spec;
  const Eigen::VectorXd energies = channel_energies(c, params, N, beta, &spec);
  auto entries = entries_from_energies(energies, l, 2 * l + 1, CouplingSign::Plus, params, spec);
  for (auto& e : entries) e.two_j = 2 * l + 1;  // degenerate spin-0 labeling
  return entries;
}

ConvergenceStudy convergence_study(int two_j, int branch, CouplingSign sign,
                                   const PhysicalParams& params, const std::vector<int>& sizes,
                                   std::vector<double> beta_grid, int level) {
  if (sizes.size() < 2) throw std::invalid_argument("convergence_study: need >= 2 sizes");
  params.validate();
  const double c = channel_centrifugal(two_j, branch, sign, params.alpha);
  if (beta_grid.empty()) {
    const double center = params.mass * params.alpha;
    for (int i = 0; i < 15; ++i)
      beta_grid.push_back(center * std::exp(-1.6 + 3.2 * i / 14.0));
  }

  ConvergenceStudy study;
  for (int N : sizes) {
    double best = std::numeric_limits<double>::infinity();
    double best_beta = beta_grid.front();
    for (double beta : beta_grid) {
      const Eigen::VectorXd energies = channel_energies(c, params, N, beta);
      if (level >= energies.size()) continue;
      if (energies(level) < best) {
        best = energies(level);
        best_beta = beta;
      }
    }
    if (!std::isfinite(best))
      throw ConvergenceError("convergence_study: requested level not found at size " +
                             std::to_string(N));
    study.rows.push_back({N, best_beta, best - params.mass});
  }
  for (size_t i = 1; i < study.rows.size(); ++i)
    if (study.rows[i].binding > study.rows[i - 1].binding + 1e-13) study.monotone = false;
  study.best_binding = study.rows.back().binding;
  study.convergence_estimate =
      std::abs(study.rows.back().binding - study.rows[study.rows.size() - 2].binding);
  return study;
}

std::vector<SpectrumEntry> compare_methods(int n, int l, int two_j,
                                           const PhysicalParams& params,
                                           const CompareConfig& config) {
  const QuantumNumbers qn = QuantumNumbers::make(n, l, two_j, 1);
  params.validate();
  const int n_r = n - l - 1;

  std::vector<SpectrumEntry> out;
  auto push = [&](Method method, double binding, double conv) {
    SpectrumEntry e;
    e.method = method;
    e.n = n;
    e.l = l;
    e.two_j = two_j;
    e.alpha = params.alpha;
    e.binding = binding;
    e.convergence_estimate = conv;
    e.sign = config.sign;
    out.push_back(e);
  };

  push(Method::NonRel, energy_nonrel(n, params), 0.0);
  push(Method::Perturbative, energy_alpha4(n, two_j, params), 0.0);
  push(Method::Dirac, dirac_binding(n, two_j, params), 0.0);
  push(Method::KG, kg_analytic_binding({two_j, l, n_r, config.sign}, params), 0.0);

  const int branch = (two_j == 2 * l + 1) ? 0 : 1;
  const auto levels = solve_channel(two_j, branch, config.sign, params, config.basis_size,
                                    config.beta, n_r);
  if (static_cast<int>(levels.size()) <= n_r)
    throw ConvergenceError("compare_methods: solver found no bound level for the state");
  SpectrumEntry solver_entry = levels[n_r];
  solver_entry.n = n;
  out.push_back(solver_entry);
  return out;
}

}  // namespace salpeter
