#pragma once

#include <string>
#include <vector>

namespace salpeter {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;      // worst observed residual / slope / deviation
  double threshold = 0.0;
  std::string detail;
};

// The module invariant suites, one function per suite. Each is
// self-contained and safe to run in any order.
CheckResult check_algebra_identities();      // exact 2x2 block identities
CheckResult check_lambda_spectrum();         // Lambda eigenvalues + continuity
CheckResult check_epsilon_truncation();      // eps_exact vs alpha^2/(2j+1)
CheckResult check_hydrogen_expectations();   // closed forms vs quadrature + scaling
CheckResult check_cancellation();            // l-independence + sign independence
CheckResult check_dirac_vs_alpha4();         // alpha^6 deviation scaling
CheckResult check_pauli_dirac_budget();      // kinetic + Darwin + spin-orbit
CheckResult check_kg();                      // analytic = Dirac; fixed point
CheckResult check_solver_baseline();         // nonrel hydrogen + sqrt consistency
CheckResult check_nonperturbative();         // converged solver vs alpha^4 scaling
CheckResult check_maxwell_residuals();       // sampled residuals + negative control

std::vector<CheckResult> run_all_checks();

}  // namespace salpeter
