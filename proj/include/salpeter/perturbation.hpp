#pragma once

#include "salpeter/types.hpp"

namespace salpeter {

// eps_j = (j+1/2) - sqrt((j+1/2)^2 - alpha^2), evaluated as
// alpha^2 / ((j+1/2) + sqrt((j+1/2)^2 - alpha^2)) to avoid the ~10-digit
// cancellation at alpha ~ 1/137.
double epsilon_exact(int two_j, double alpha);

// Leading term alpha^2 / (2j+1).
double epsilon_approx(int two_j, double alpha);

struct EpsilonResult {
  double exact;
  double approx;
  int two_j;
  double alpha;
};
EpsilonResult epsilon(int two_j, double alpha);

// lambda = l - eps_j; lambda(lambda+1) is the channel eigenvalue of the
// Lambda(Lambda+1) block.
double lambda_value(int l, int two_j, double alpha);

// alpha^2-truncated channel eigenvalue l(l+1) - alpha^2 (l+1/2)/(j+1/2).
double centrifugal_approx(int l, int two_j, double alpha);

// Kinetic correction E_n (alpha^2/n^2)(n/(l+1/2) - 3/4). Internally also
// evaluated through <V> and <V^2> and cross-checked; the two routes must
// agree to 1e-13 relative.
double delta_E10(int n, int l, const PhysicalParams& params);

// The operator-composition route alone, -(1/2m)[E_n^2 - 2 E_n <V> + <V^2>],
// exposed so tests can compare the paths independently.
double delta_E10_operator_route(int n, int l, const PhysicalParams& params);

// Angular correction E_n (alpha^2/n)[1/(j+1/2) - 1/(l+1/2)].
double delta_E11(int n, int l, int two_j, const PhysicalParams& params);

// Final binding-energy formula E_n [1 - (alpha^2/n^2)(3/4 - n/(j+1/2))].
double energy_alpha4(int n, int two_j, const PhysicalParams& params);

struct EnergyBreakdown {
  double e_n;
  double delta_e10;
  double delta_e11;
  double total;
  QuantumNumbers qn;
  CouplingSign sign;
};

// Assembles all three terms; the total is independent of l at fixed (n, j)
// and of the coupling sign.
EnergyBreakdown breakdown(const QuantumNumbers& qn, CouplingSign sign,
                          const PhysicalParams& params);

}  // namespace salpeter
