#include "salpeter/checks.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "salpeter/angular.hpp"
#include "salpeter/basis.hpp"
#include "salpeter/hydrogen.hpp"
#include "salpeter/maxwell.hpp"
#include "salpeter/pauli.hpp"
#include "salpeter/perturbation.hpp"
#include "salpeter/reference.hpp"
#include "salpeter/solver.hpp"

namespace salpeter {

namespace {

constexpr double kHydrogenAlpha = 1.0 / 137.035999;

double max_abs(const Mat2& m) {
  return m.cwiseAbs().maxCoeff();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

const std::vector<int> kTwoJGrid = {1, 3, 5, 7, 9, 11, 13, 15};
const std::vector<CouplingSign> kSigns = {CouplingSign::Plus, CouplingSign::Minus};

}  // namespace

CheckResult check_algebra_identities() {
  CheckResult r{"algebra-identities", false, 0.0, 1e-13,
                "sigma products, anticommutation, Lambda quadratic identities"};
  // sigma_k sigma_j = delta_kj + i eps_kjl sigma_l
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 3; ++j)
      r.metric = std::max(r.metric, max_abs(pauli_product(k, j) - pauli(k) * pauli(j)));

  for (int two_j : kTwoJGrid) {
    const Mat2 A = sigma_dot_L_plus_one_block(two_j).entries;
    const Mat2 B = sigma_dot_er_block(two_j).entries;
    // (sigma.L+1) anticommutes with sigma.e_r
    r.metric = std::max(r.metric, max_abs(A * B + B * A));
    // sigma.L (sigma.L + 1) = L^2
    const double l0 = 0.5 * (two_j - 1), l1 = 0.5 * (two_j + 1);
    Mat2 l2;
    l2 << l0 * (l0 + 1), 0, 0, l1 * (l1 + 1);
    r.metric = std::max(r.metric, max_abs((A - Mat2::Identity()) * A - l2));

    for (CouplingSign sign : kSigns) {
      for (double alpha : {0.0, 0.1, 0.5}) {
        const Mat2 lam = lambda_block(two_j, alpha, sign).entries;
        r.metric = std::max(r.metric,
                            max_abs(lam * lam - (A * A - alpha * alpha * Mat2::Identity())));
        r.metric = std::max(r.metric, max_abs(lam * (lam + Mat2::Identity()) -
                                              numerator_block(two_j, alpha, sign).entries));
      }
    }
  }
  r.passed = r.metric <= r.threshold;
  return r;
}

CheckResult check_lambda_spectrum() {
  CheckResult r{"lambda-spectrum", false, 0.0, 1e-12,
                "Lambda eigenvalues -+sqrt((j+1/2)^2 - alpha^2), continuity-matched"};
  double max_imag = 0.0;
  for (int two_j : kTwoJGrid) {
    const double kappa = 0.5 * (two_j + 1);
    for (CouplingSign sign : kSigns) {
      for (double alpha : {1e-6, 0.1, 0.5}) {
        const auto ev = channel_matched_eigenvalues(lambda_block(two_j, alpha, sign).entries);
        const double expected = std::sqrt(kappa * kappa - alpha * alpha);
        r.metric = std::max(r.metric, std::abs(ev[0].real() + expected));
        r.metric = std::max(r.metric, std::abs(ev[1].real() - expected));
        max_imag = std::max({max_imag, std::abs(ev[0].imag()), std::abs(ev[1].imag())});
      }
    }
  }
  r.passed = r.metric <= r.threshold && max_imag <= 1e-13;
  r.detail += "; max |Im| = " + fmt(max_imag);
  return r;
}

CheckResult check_epsilon_truncation() {
  CheckResult r{"epsilon-truncation", false, 0.0, 1.0,
                "|eps_exact - alpha^2/(2j+1)| within 1.1 alpha^4 / (8 (j+1/2)^3)"};
  for (int two_j : {1, 3, 5}) {
    const double kappa = 0.5 * (two_j + 1);
    for (double alpha : {0.05, 0.1, 0.2, 0.3}) {
      const double diff = std::abs(epsilon_exact(two_j, alpha) - epsilon_approx(two_j, alpha));
      const double bound = 1.1 * std::pow(alpha, 4) / (8.0 * kappa * kappa * kappa);
      r.metric = std::max(r.metric, diff / bound);
    }
  }
  r.passed = r.metric <= r.threshold;
  return r;
}

CheckResult check_hydrogen_expectations() {
  CheckResult r{"hydrogen-expectations", false, 0.0, 1e-10,
                "closed-form <1/r>, <1/r^2>, <1/r^3> vs quadrature; scaling slopes"};
  const PhysicalParams params{1.0, 0.2};
  for (int n = 1; n <= 10; ++n) {
    for (int l = 0; l < n; ++l) {
      RadialState state{QuantumNumbers::make(n, l, 2 * l + 1, 1), params};
      auto rel = [&](double closed, int k) {
        return std::abs(closed - expectation_r_power_quadrature(state, k)) / std::abs(closed);
      };
      r.metric = std::max(r.metric, rel(expectation_inv_r(n, params), -1));
      r.metric = std::max(r.metric, rel(expectation_inv_r2(n, l, params), -2));
      if (l >= 1) r.metric = std::max(r.metric, rel(expectation_inv_r3(n, l, params), -3));
    }
  }
  double slope_err = 0.0;
  const std::vector<double> grid = {0.01, 0.02, 0.04};
  for (int k : {-2, -1, 1, 2}) {
    slope_err = std::max(slope_err, std::abs(alpha_scaling_exponent(1, 0, k, grid) + k));
    slope_err = std::max(slope_err, std::abs(alpha_scaling_exponent(2, 1, k, grid) + k));
  }
  r.passed = r.metric <= r.threshold && slope_err <= 1e-8;
  r.detail += "; slope error = " + fmt(slope_err);
  return r;
}

CheckResult check_cancellation() {
  CheckResult r{"cancellation-and-sign", false, 0.0, 1e-14,
                "breakdown totals agree across l = j -+ 1/2 and are bit-identical in sign"};
  bool bit_identical = true;
  for (double alpha : {kHydrogenAlpha, 0.2}) {
    const PhysicalParams params{1.0, alpha};
    for (int n = 1; n <= 6; ++n) {
      for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
        const int l_low = (two_j - 1) / 2;
        const int l_high = (two_j + 1) / 2;
        const auto low = breakdown(QuantumNumbers::make(n, l_low, two_j, 1),
                                   CouplingSign::Plus, params);
        if (l_high <= n - 1) {
          const auto high = breakdown(QuantumNumbers::make(n, l_high, two_j, 1),
                                      CouplingSign::Plus, params);
          r.metric = std::max(r.metric,
                              std::abs(low.total - high.total) / std::abs(low.total));
        }
        const auto minus = breakdown(QuantumNumbers::make(n, l_low, two_j, 1),
                                     CouplingSign::Minus, params);
        if (minus.total != low.total) bit_identical = false;
        // and the assembled total matches the closed-form alpha^4 energy
        r.metric = std::max(r.metric, std::abs(low.total - energy_alpha4(n, two_j, params)) /
                                          std::abs(low.total));
      }
    }
  }
  r.passed = r.metric <= r.threshold && bit_identical;
  if (!bit_identical) r.detail += "; sign flip changed a total";
  return r;
}

CheckResult check_dirac_vs_alpha4() {
  CheckResult r{"dirac-vs-alpha4", false, 0.0, 0.0,
                "deviation from the alpha^4 formula scales as alpha^6"};
  double worst_slope_err = 0.0;
  double worst_dev_ratio = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
      const double d1 = std::abs(
          dirac_binding_alpha4_check(n, two_j, {1.0, 0.05}).deviation_from_alpha4);
      const double d2 = std::abs(
          dirac_binding_alpha4_check(n, two_j, {1.0, 0.10}).deviation_from_alpha4);
      const double slope = std::log(d2 / d1) / std::log(2.0);
      worst_slope_err = std::max(worst_slope_err, std::abs(slope - 6.0));

      const double dev = std::abs(
          dirac_binding_alpha4_check(n, two_j, {1.0, kHydrogenAlpha}).deviation_from_alpha4);
      worst_dev_ratio = std::max(worst_dev_ratio, dev / (10.0 * std::pow(kHydrogenAlpha, 6)));
    }
  }
  r.metric = worst_slope_err;
  r.threshold = 0.5;
  r.passed = worst_slope_err <= 0.5 && worst_dev_ratio <= 1.0;
  r.detail += "; |dev|/(10 m alpha^6) = " + fmt(worst_dev_ratio);
  return r;
}

CheckResult check_pauli_dirac_budget() {
  CheckResult r{"pauli-dirac-budget", false, 0.0, 1e-12,
                "kinetic + Darwin + spin-orbit equals the alpha^4 shift"};
  for (double alpha : {kHydrogenAlpha, 0.1}) {
    const PhysicalParams params{1.0, alpha};
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        for (int two_j : {2 * l - 1, 2 * l + 1}) {
          if (two_j < 1) continue;
          const auto budget = pauli_dirac_budget(n, l, two_j, params);
          // the shift in product form; the naive difference of the two
          // energies loses ~alpha^2 relative digits to cancellation
          const double shift = -energy_nonrel(n, params) * alpha * alpha / (n * n) *
                               (0.75 - 2.0 * n / (two_j + 1.0));
          r.metric = std::max(r.metric, std::abs(budget.total_shift - shift) / std::abs(shift));
        }
      }
    }
  }
  r.passed = r.metric <= r.threshold;
  return r;
}

CheckResult check_kg() {
  CheckResult r{"klein-gordon-2spinor", false, 0.0, 1e-14,
                "analytic channel energies equal Dirac; fixed point reproduces them"};
  for (double alpha : {0.2, 0.5}) {
    const PhysicalParams params{1.0, alpha};
    for (int n = 1; n <= 3; ++n) {
      for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
        const int l_low = (two_j - 1) / 2;
        const KGChannel ch{two_j, l_low, n - l_low - 1, CouplingSign::Plus};
        const double kg = kg_analytic_energy(ch, params);
        const double dirac = dirac_energy(n, two_j, params);
        r.metric = std::max(r.metric, std::abs(kg - dirac) / dirac);
      }
    }
  }

  double iter_err = 0.0;
  int max_iterations = 0;
  for (double alpha : {0.1, 0.3}) {
    const PhysicalParams params{1.0, alpha};
    const std::vector<KGChannel> channels = {
        {1, 0, 0, CouplingSign::Plus}, {1, 0, 1, CouplingSign::Plus},
        {1, 1, 0, CouplingSign::Minus}, {3, 1, 0, CouplingSign::Plus}};
    for (const auto& ch : channels) {
      const auto result = kg_iterative_solve(ch, params, 80);
      const double exact = kg_analytic_energy(ch, params);
      iter_err = std::max(iter_err, std::abs(result.energy - exact) / exact);
      max_iterations = std::max(max_iterations, result.iterations);
    }
  }
  r.passed = r.metric <= r.threshold && iter_err <= 1e-9 && max_iterations <= 50;
  r.detail += "; fixed-point rel err = " + fmt(iter_err) +
              ", max iterations = " + std::to_string(max_iterations);
  return r;
}

CheckResult check_solver_baseline() {
  CheckResult r{"solver-baseline", false, 0.0, 1e-8,
                "nonrelativistic hydrogen levels from the matrix pipeline; sqrt consistency"};
  // p2/2m - 1/r with c = 0 must reproduce -1/(2 n^2)
  const RadialBasis basis = build_basis(0.0, 0.5, 60);
  const Eigen::MatrixXd h =
      0.5 * p2_matrix(basis).entries + coulomb_matrix(basis, 1.0).entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  for (int n = 1; n <= 3; ++n)
    r.metric = std::max(r.metric, std::abs(es.eigenvalues()(n - 1) + 0.5 / (n * n)));

  // (sqrt(m^2 + P))^2 = m^2 + P
  double sqrt_err = 0.0;
  const RadialBasis rel_basis = build_basis(0.1339745962155613, 0.05, 80);
  const OperatorMatrix p2 = p2_matrix(rel_basis);
  const OperatorMatrix root = sqrt_operator(p2, 1.0);
  const Eigen::MatrixXd reconstructed = root.entries * root.entries;
  const Eigen::MatrixXd target =
      p2.entries + Eigen::MatrixXd::Identity(p2.entries.rows(), p2.entries.cols());
  sqrt_err = (reconstructed - target).cwiseAbs().maxCoeff() / target.cwiseAbs().maxCoeff();

  r.passed = r.metric <= r.threshold && sqrt_err <= 1e-11;
  r.detail += "; sqrt reconstruction rel err = " + fmt(sqrt_err);
  return r;
}

CheckResult check_nonperturbative() {
  CheckResult r{"nonperturbative-vs-alpha4", false, 0.0, 0.0,
                "converged solver vs the alpha^4 formula: scaling, sign independence"};
  const std::vector<int> sizes = {150, 200};
  double conv_max = 0.0;
  double diffs[2];
  int idx = 0;
  double betas[2];
  for (double alpha : {0.1, 0.2}) {
    const PhysicalParams params{1.0, alpha};
    const auto study = convergence_study(1, 0, CouplingSign::Plus, params, sizes);
    conv_max = std::max(conv_max, study.convergence_estimate);
    diffs[idx] = std::abs(study.best_binding - energy_alpha4(1, 1, params));
    betas[idx] = study.rows.back().beta;
    ++idx;
  }
  const double slope = std::log(diffs[1] / diffs[0]) / std::log(2.0);

  // sign independence of the full bound level set at the converged size
  double sign_gap = 0.0;
  {
    const PhysicalParams params{1.0, 0.2};
    const auto plus = solve_channel(1, 0, CouplingSign::Plus, params, 200, betas[1]);
    const auto minus = solve_channel(1, 0, CouplingSign::Minus, params, 200, betas[1]);
    const size_t count = std::min(plus.size(), minus.size());
    for (size_t i = 0; i < count; ++i)
      sign_gap = std::max(sign_gap, std::abs(plus[i].binding - minus[i].binding));
    if (plus.size() != minus.size()) sign_gap = 1.0;
  }

  r.metric = slope;
  r.threshold = 4.5;
  r.passed = slope >= 4.5 && conv_max <= 1e-6 && sign_gap <= 1e-12;
  r.detail += "; slope = " + fmt(slope) +
              ", convergence estimate = " + fmt(conv_max) +
              ", sign gap = " + fmt(sign_gap);
  return r;
}

CheckResult check_maxwell_residuals() {
  CheckResult r{"maxwell-pauli-residuals", false, 0.0, 1e-10,
                "first-order operator residual at 100 points, both configurations and signs"};
  const auto coulomb = FieldConfig::coulomb(kHydrogenAlpha);
  const Eigen::Vector3d k(0.3, -0.4, 1.2);
  const Eigen::Vector3d pol = Eigen::Vector3d(4, 3, 0).normalized();
  const auto wave = FieldConfig::plane_wave(k, pol, 2.5);
  const auto detuned = FieldConfig::plane_wave_detuned(k, pol, 2.5, 1.1 * k.norm());

  double control = 0.0;
  for (int i = 0; i < 100; ++i) {
    // low-discrepancy lattice over a box away from the origin
    const double u = std::fmod(0.618033988749895 * (i + 1), 1.0);
    const double v = std::fmod(0.414213562373095 * (i + 1), 1.0);
    const double w = std::fmod(0.732050807568877 * (i + 1), 1.0);
    const Eigen::Vector3d x(0.5 + 2.0 * u, -1.5 + 3.0 * v, 0.25 + 1.5 * w);
    const double t = 0.7 * i / 100.0;
    for (CouplingSign sign : kSigns) {
      r.metric = std::max(r.metric, max_abs(maxwell_pauli_residual(coulomb, sign, x, t)));
      r.metric = std::max(r.metric, max_abs(maxwell_pauli_residual(wave, sign, x, t)));
      control = std::max(control, max_abs(maxwell_pauli_residual(detuned, sign, x, t)));
    }
  }
  r.passed = r.metric <= r.threshold && control > 1e-3;
  r.detail += "; detuned control residual = " + fmt(control);
  return r;
}

std::vector<CheckResult> run_all_checks() {
  return {check_algebra_identities(), check_lambda_spectrum(),  check_epsilon_truncation(),
          check_hydrogen_expectations(), check_cancellation(),  check_dirac_vs_alpha4(),
          check_pauli_dirac_budget(),    check_kg(),            check_solver_baseline(),
          check_nonperturbative(),       check_maxwell_residuals()};
}

}  // namespace salpeter
