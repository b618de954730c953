#pragma once

#include <stdexcept>

namespace salpeter {

// Branch of the +- i alpha sigma.e_r coupling. Every sign-dependent
// operation takes it explicitly; nothing defaults behind the caller's back.
enum class CouplingSign { Plus, Minus };

inline double sign_factor(CouplingSign s) {
  return s == CouplingSign::Plus ? 1.0 : -1.0;
}

inline const char* sign_name(CouplingSign s) {
  return s == CouplingSign::Plus ? "plus" : "minus";
}

// Particle mass and electromagnetic coupling in natural units (hbar = c = 1).
struct PhysicalParams {
  double mass = 1.0;
  double alpha = 7.2973525693e-3;

  void validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
      throw std::invalid_argument("alpha must lie in (0, 1)");
  }
};

// Hydrogenic state labels. Half-integers j and m are stored doubled so that
// all bookkeeping stays in exact integer arithmetic.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int two_j = 1;
  int two_m = 1;

  static QuantumNumbers make(int n, int l, int two_j, int two_m) {
    QuantumNumbers qn{n, l, two_j, two_m};
    qn.validate();
    return qn;
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (l < 0 || l > n - 1) throw std::invalid_argument("l must satisfy 0 <= l <= n-1");
    if (two_j < 1) throw std::invalid_argument("j must be >= 1/2");
    if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
      throw std::invalid_argument("j must equal l +- 1/2");
    if (two_j % 2 == 0 || two_m % 2 == 0)
      throw std::invalid_argument("2j and 2m must be odd integers");
    if (two_m < -two_j || two_m > two_j)
      throw std::invalid_argument("|m| must not exceed j");
  }

  double j() const { return 0.5 * two_j; }
  double m() const { return 0.5 * two_m; }
};

// Raised when an iterative or variational solve fails to settle. The CLI
// maps it to exit code 2, distinct from argument errors.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace salpeter
