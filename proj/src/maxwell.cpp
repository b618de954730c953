#include "salpeter/maxwell.hpp"

#include <cmath>

namespace salpeter {

FieldConfig FieldConfig::coulomb(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("FieldConfig::coulomb: alpha must be positive");
  FieldConfig f;
  f.kind = Kind::CoulombStatic;
  f.alpha = alpha;
  return f;
}

FieldConfig FieldConfig::plane_wave(const Eigen::Vector3d& k, const Eigen::Vector3d& pol,
                                    double amplitude) {
  return plane_wave_detuned(k, pol, amplitude, k.norm());
}

FieldConfig FieldConfig::plane_wave_detuned(const Eigen::Vector3d& k, const Eigen::Vector3d& pol,
                                            double amplitude, double omega) {
  if (!(k.norm() > 0.0))
    throw std::invalid_argument("FieldConfig::plane_wave: wavevector must be nonzero");
  if (std::abs(pol.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("FieldConfig::plane_wave: polarization must be a unit vector");
  if (std::abs(k.dot(pol)) > 1e-12 * k.norm())
    throw std::invalid_argument("FieldConfig::plane_wave: polarization must be transverse");
  FieldConfig f;
  f.kind = Kind::VacuumPlaneWave;
  f.wavevector = k;
  f.polarization = pol;
  f.amplitude = amplitude;
  f.omega = omega;
  return f;
}

namespace {
void require_regular(const FieldConfig& f, const Eigen::Vector3d& x) {
  if (f.kind == FieldConfig::Kind::CoulombStatic && !(x.norm() > 0.0))
    throw std::domain_error("Coulomb field evaluated at the origin");
}
double phase(const FieldConfig& f, const Eigen::Vector3d& x, double t) {
  return f.wavevector.dot(x) - f.omega * t;
}
}  // namespace

Eigen::Vector3d FieldConfig::electric(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) {
    const double r = x.norm();
    return alpha * x / (r * r * r);
  }
  return polarization * amplitude * std::cos(phase(*this, x, t));
}

Eigen::Vector3d FieldConfig::magnetic(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return Eigen::Vector3d::Zero();
  const Eigen::Vector3d khat = wavevector.normalized();
  return khat.cross(polarization) * amplitude * std::cos(phase(*this, x, t));
}

Eigen::Vector3d FieldConfig::dE_dt(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return Eigen::Vector3d::Zero();
  return polarization * amplitude * omega * std::sin(phase(*this, x, t));
}

Eigen::Vector3d FieldConfig::dB_dt(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return Eigen::Vector3d::Zero();
  const Eigen::Vector3d khat = wavevector.normalized();
  return khat.cross(polarization) * amplitude * omega * std::sin(phase(*this, x, t));
}

double FieldConfig::div_E(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return 0.0;  // r > 0
  return -amplitude * std::sin(phase(*this, x, t)) * wavevector.dot(polarization);
}

double FieldConfig::div_B(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return 0.0;
  const Eigen::Vector3d khat = wavevector.normalized();
  return -amplitude * std::sin(phase(*this, x, t)) * wavevector.dot(khat.cross(polarization));
}

Eigen::Vector3d FieldConfig::curl_E(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return Eigen::Vector3d::Zero();
  return -amplitude * std::sin(phase(*this, x, t)) * wavevector.cross(polarization);
}

Eigen::Vector3d FieldConfig::curl_B(const Eigen::Vector3d& x, double t) const {
  require_regular(*this, x);
  if (kind == Kind::CoulombStatic) return Eigen::Vector3d::Zero();
  const Eigen::Vector3d khat = wavevector.normalized();
  return -amplitude * std::sin(phase(*this, x, t)) * wavevector.cross(khat.cross(polarization));
}

double FieldConfig::charge_density(const Eigen::Vector3d& x, double) const {
  require_regular(*this, x);
  return 0.0;  // both families are source-free away from singular points
}

Eigen::Vector3d FieldConfig::current(const Eigen::Vector3d& x, double) const {
  require_regular(*this, x);
  return Eigen::Vector3d::Zero();
}

Mat2 maxwell_pauli_residual(const FieldConfig& field, CouplingSign sign,
                            const Eigen::Vector3d& x, double t) {
  using namespace std::complex_literals;
  require_regular(field, x);
  const double s = sign_factor(sign);

  // F = B -+ iE and its exact derivatives.
  const std::complex<double> unit = -s * 1i;
  auto F = [&](auto&& b, auto&& e) { return b.template cast<std::complex<double>>() +
                                            unit * e.template cast<std::complex<double>>(); };
  const Eigen::Vector3cd dF_dt = F(field.dB_dt(x, t), field.dE_dt(x, t));
  const Eigen::Vector3cd curl_F = F(field.curl_B(x, t), field.curl_E(x, t));
  const std::complex<double> div_F = field.div_B(x, t) + unit * field.div_E(x, t);

  // (1 p0 -+ sigma.p) Phi with p0 = i d/dt, p = -i grad:
  // i sigma.dF/dt -+ [-i (div F) 1 + sigma.(curl F)].
  Mat2 lhs = 1i * sigma_dot(dF_dt) - s * (-1i * div_F * Mat2::Identity() + sigma_dot(curl_F));

  const double rho = field.charge_density(x, t);
  const Eigen::Vector3d J = field.current(x, t);
  Mat2 rhs = s * rho * Mat2::Identity() + sigma_dot(J);

  return lhs - rhs;
}

}  // namespace salpeter
