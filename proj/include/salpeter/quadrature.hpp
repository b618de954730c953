#pragma once

#include <Eigen/Dense>

namespace salpeter {

// Generalized Gauss-Laguerre rule for the weight x^a e^{-x} on (0, inf),
// computed by Golub-Welsch. Besides the plain weights it carries
// sqrt(w_k e^{x_k}), which stays representable far beyond the point where
// w_k itself underflows; large-basis assembly works with e^{-x/2}-scaled
// basis functions and these scaled weights throughout.
struct LaguerreRule {
  double weight_exponent = 0.0;
  Eigen::VectorXd nodes;           // ascending
  Eigen::VectorXd weights;         // plain w_k, may underflow for huge rules
  Eigen::VectorXd sqrt_scaled_weights;  // sqrt(w_k) e^{x_k/2}
};

// Cached; rules are pure functions of (n, a).
const LaguerreRule& laguerre_rule(int n, double a);

// Gauss-Legendre rule on [-1, 1].
struct LegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
const LegendreRule& legendre_rule(int n);

// Orthonormal generalized Laguerre polynomials times e^{-x/2}:
// values(k, i) = N_i L_i^{(a)}(x_k) e^{-x_k/2},  N_i = sqrt(i! / Gamma(i+a+1)).
// The recurrence never leaves the oscillatory O(1) range, so it is safe for
// hundreds of basis functions at nodes of large rules.
Eigen::MatrixXd laguerre_ortho_scaled(const Eigen::VectorXd& x, double a, int count);

// Plain generalized Laguerre polynomial L_n^{(a)}(x) by three-term recurrence
// (small degrees; used by the closed-form hydrogen radial functions).
double laguerre(int n, double a, double x);

}  // namespace salpeter
