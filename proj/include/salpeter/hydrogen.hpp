#pragma once

#include <vector>

#include "salpeter/types.hpp"

namespace salpeter {

// Bohr radius a0 = 1/(m alpha).
double bohr_radius(const PhysicalParams& params);

// Nonrelativistic binding energy E_n = -m alpha^2 / (2 n^2).
double energy_nonrel(int n, const PhysicalParams& params);

// A bound hydrogenic radial state; normalization is a testable invariant,
// not an assumption.
struct RadialState {
  QuantumNumbers qn;
  PhysicalParams params;
};

// Closed-form radial wavefunction R_{nl}(r), positive as r -> 0+.
double radial_R(const RadialState& state, double r);

// <1/r> = 1/(a0 n^2), independent of l.
double expectation_inv_r(int n, const PhysicalParams& params);

// <1/r^2> = 1/(a0^2 n^3 (l + 1/2)).
double expectation_inv_r2(int n, int l, const PhysicalParams& params);

// <1/r^3> = 1/(a0^3 n^3 l (l + 1/2)(l + 1)); diverges for l = 0.
double expectation_inv_r3(int n, int l, const PhysicalParams& params);

// <r^k> by Gauss-Laguerre quadrature on the exact radial density; the
// independent oracle for every closed form above. Requires k > -(2l+3).
double expectation_r_power_quadrature(const RadialState& state, int k);

// Least-squares slope of log<r^k> vs log(alpha) over the supplied grid;
// the exact power law <r^k> ~ alpha^{-k} makes it -k.
double alpha_scaling_exponent(int n, int l, int k, const std::vector<double>& alpha_grid);

}  // namespace salpeter
