#pragma once

#include <Eigen/Dense>

#include "salpeter/pauli.hpp"
#include "salpeter/types.hpp"

namespace salpeter {

// Analytic field family with closed-form space-time derivatives; no
// numerical differentiation anywhere in the residual check.
struct FieldConfig {
  enum class Kind { CoulombStatic, VacuumPlaneWave };
  Kind kind = Kind::CoulombStatic;

  // Coulomb
  double alpha = 0.0;

  // plane wave
  Eigen::Vector3d wavevector = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d polarization = Eigen::Vector3d::UnitX();
  double amplitude = 1.0;
  double omega = 1.0;  // |k| for a valid Maxwell solution

  static FieldConfig coulomb(double alpha);
  static FieldConfig plane_wave(const Eigen::Vector3d& k, const Eigen::Vector3d& pol,
                                double amplitude);
  // Negative control: frequency decoupled from |k|; not a Maxwell solution.
  static FieldConfig plane_wave_detuned(const Eigen::Vector3d& k, const Eigen::Vector3d& pol,
                                        double amplitude, double omega);

  Eigen::Vector3d electric(const Eigen::Vector3d& x, double t) const;
  Eigen::Vector3d magnetic(const Eigen::Vector3d& x, double t) const;
  Eigen::Vector3d dE_dt(const Eigen::Vector3d& x, double t) const;
  Eigen::Vector3d dB_dt(const Eigen::Vector3d& x, double t) const;
  double div_E(const Eigen::Vector3d& x, double t) const;
  double div_B(const Eigen::Vector3d& x, double t) const;
  Eigen::Vector3d curl_E(const Eigen::Vector3d& x, double t) const;
  Eigen::Vector3d curl_B(const Eigen::Vector3d& x, double t) const;
  double charge_density(const Eigen::Vector3d& x, double t) const;
  Eigen::Vector3d current(const Eigen::Vector3d& x, double t) const;
};

// Residual of (1 p0 -+ sigma.p) Phi_pm = +-(rho 1 +- sigma.J) with
// Phi_pm = sigma.(B -+ iE), evaluated with the exact analytic derivatives.
// Zero for source-free regions of valid Maxwell fields.
Mat2 maxwell_pauli_residual(const FieldConfig& field, CouplingSign sign,
                            const Eigen::Vector3d& x, double t);

}  // namespace salpeter
