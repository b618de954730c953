#pragma once

#include <optional>
#include <vector>

#include "salpeter/basis.hpp"
#include "salpeter/types.hpp"

namespace salpeter {

enum class Method { NonRel, Perturbative, Dirac, KG, SqrtSolver };
const char* method_name(Method m);

// One (method, state, alpha) -> binding-energy record; the CLI's unit of
// output.
struct SpectrumEntry {
  Method method = Method::SqrtSolver;
  int n = 1;
  int l = 0;
  int two_j = 1;
  double alpha = 0.0;
  double binding = 0.0;                // E_total - m, negative for bound states
  double convergence_estimate = 0.0;
  CouplingSign sign = CouplingSign::Plus;
  std::optional<RadialBasisSpec> basis_meta;
};

// Spectral solve of one angular channel of the square-root Hamiltonian:
// c = lambda(lambda+1) + alpha^2 from the exact numerator-block eigenvalue,
// H = sqrt(m^2 + p2) - alpha/r on the Laguerre basis. Returns bound levels
// (E < m) in ascending order; beta <= 0 selects the variational scan.
std::vector<SpectrumEntry> solve_channel(int two_j, int branch, CouplingSign sign,
                                         const PhysicalParams& params, int N,
                                         double beta = 0.0, int tune_level = 0);

// Spin-0 degenerate case: c = l(l+1), no spin term.
std::vector<SpectrumEntry> solve_spinless(int l, const PhysicalParams& params,
                                          int N, double beta = 0.0, int tune_level = 0);

// Variational beta scan: 15 log-spaced points around m*alpha, minimizing the
// requested eigenvalue.
double tune_beta(double c, const PhysicalParams& params, int N, int level = 0);

struct ConvergenceRow {
  int basis_size;
  double beta;
  double binding;
};
struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;      // one per basis size, at the best beta
  double best_binding = 0.0;
  double convergence_estimate = 0.0;     // |E(N_max) - E(N_prev)|
  bool monotone = true;                  // variational monotonicity across sizes
};
ConvergenceStudy convergence_study(int two_j, int branch, CouplingSign sign,
                                   const PhysicalParams& params,
                                   const std::vector<int>& sizes,
                                   std::vector<double> beta_grid = {},
                                   int level = 0);

struct CompareConfig {
  int basis_size = 150;
  double beta = 0.0;  // <= 0: variational scan
  CouplingSign sign = CouplingSign::Plus;
};

// One entry per method (NONREL, PERTURBATIVE, DIRAC, KG, SQRT_SOLVER) for
// the same physical state.
std::vector<SpectrumEntry> compare_methods(int n, int l, int two_j,
                                           const PhysicalParams& params,
                                           const CompareConfig& config);

}  // namespace salpeter
