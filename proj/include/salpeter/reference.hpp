#pragma once

#include "salpeter/basis.hpp"
#include "salpeter/types.hpp"

namespace salpeter {

// Exact Dirac-Coulomb energy m / sqrt(1 + alpha^2/(n - eps_j)^2),
// rest mass included.
double dirac_energy(int n, int two_j, const PhysicalParams& params);

// Binding energy E - m computed without subtractive cancellation:
// -m x / (sqrt(1+x) (1 + sqrt(1+x))) with x = alpha^2/(n - eps_j)^2.
double dirac_binding(int n, int two_j, const PhysicalParams& params);

struct DiracCheck {
  double binding;
  double deviation_from_alpha4;  // binding - energy_alpha4(n, j)
};
DiracCheck dirac_binding_alpha4_check(int n, int two_j, const PhysicalParams& params);

// Relativistic correction budget of the Pauli-approximated Dirac Hamiltonian.
struct CorrectionBudget {
  double kinetic = 0;     // p^4 term, all states
  double darwin = 0;      // contact term, l = 0 only
  double spin_orbit = 0;  // l >= 1 only
  double total_shift = 0;
};
CorrectionBudget pauli_dirac_budget(int n, int l, int two_j, const PhysicalParams& params);

// One channel of the Klein-Gordon-like 2-spinor equation.
struct KGChannel {
  int two_j = 1;
  int l = 0;              // branch label, l = j -+ 1/2
  int n_r = 0;            // radial quantum number
  CouplingSign sign = CouplingSign::Plus;

  void validate() const {
    if (n_r < 0) throw std::invalid_argument("n_r must be >= 0");
    if (two_j < 1 || two_j % 2 == 0) throw std::invalid_argument("2j must be a positive odd integer");
    if (2 * l + 1 != two_j && 2 * l - 1 != two_j)
      throw std::invalid_argument("l must equal j -+ 1/2");
  }
};

// Closed-form channel energy m / sqrt(1 + alpha^2/N^2), N = n_r + lambda + 1.
double kg_analytic_energy(const KGChannel& channel, const PhysicalParams& params);
double kg_analytic_binding(const KGChannel& channel, const PhysicalParams& params);

// Fixed-point solve of the nonlinear radial eigenproblem
// (E - V)^2 psi = (m^2 + p^2 -+ i alpha sigma.e_r / r^2) psi:
// assemble p_r^2 + lambda(lambda+1)/r^2 - 2 E_k alpha / r, take its
// (n_r+1)-th eigenvalue mu, update E = sqrt(m^2 + mu).
struct KGIterativeResult {
  double energy;       // total, rest mass included
  int iterations;
  double last_delta;   // |E_k+1 - E_k| at termination
};
KGIterativeResult kg_iterative_solve(const KGChannel& channel, const PhysicalParams& params,
                                     int basis_size, double beta = 0.0,
                                     double initial_energy = 0.0);

}  // namespace salpeter
