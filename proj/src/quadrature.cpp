#include "salpeter/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace salpeter {

namespace {

LaguerreRule compute_laguerre(int n, double a) {
  if (n < 1) throw std::invalid_argument("laguerre_rule: need at least one node");
  if (a <= -1.0) throw std::invalid_argument("laguerre_rule: weight exponent must exceed -1");

  // Jacobi matrix of the orthonormal generalized Laguerre polynomials:
  // diagonal 2i+a+1, off-diagonal sqrt(i(i+a)).
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = 2.0 * i + a + 1.0;
    if (i > 0) {
      double b = std::sqrt(i * (i + a));
      J(i, i - 1) = b;
      J(i - 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);

  LaguerreRule rule;
  rule.weight_exponent = a;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  rule.sqrt_scaled_weights.resize(n);
  // Christoffel identity: w_k = 1 / sum_j p_j(x_k)^2 over the orthonormal
  // polynomials of degree < n. In scaled form sqrt(w_k) e^{x_k/2}
  // = 1 / sqrt(sum_j h_j(x_k)^2) with h_j = p_j e^{-x/2}, which keeps full
  // relative accuracy out in the tail where the eigenvector components of
  // the Jacobi matrix are pure rounding noise.
  const Eigen::MatrixXd h = laguerre_ortho_scaled(rule.nodes, a, n);
  for (int k = 0; k < n; ++k) {
    rule.sqrt_scaled_weights(k) = 1.0 / h.row(k).norm();
    rule.weights(k) = rule.sqrt_scaled_weights(k) * rule.sqrt_scaled_weights(k) *
                      std::exp(-rule.nodes(k));  // may underflow to 0 in the tail
  }
  return rule;
}

LegendreRule compute_legendre(int n) {
  if (n < 1) throw std::invalid_argument("legendre_rule: need at least one node");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = b;
    J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  LegendreRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double v0 = es.eigenvectors()(0, k);
    rule.weights(k) = 2.0 * v0 * v0;
  }
  return rule;
}

}  // namespace

const LaguerreRule& laguerre_rule(int n, double a) {
  static std::map<std::pair<int, double>, LaguerreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, a);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_laguerre(n, a)).first;
  return it->second;
}

const LegendreRule& legendre_rule(int n) {
  static std::map<int, LegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_legendre(n)).first;
  return it->second;
}

Eigen::MatrixXd laguerre_ortho_scaled(const Eigen::VectorXd& x, double a, int count) {
  const int m = static_cast<int>(x.size());
  Eigen::MatrixXd values(m, count);
  const double half_log_gamma = 0.5 * std::lgamma(a + 1.0);
  // The recurrence runs on rescaled values with a running exponent offset:
  // far beyond the turning point the early h_i underflow while the late ones
  // are O(1), and a plain double recurrence starting from e^{-x/2} would lose
  // them all to a hard zero.
  constexpr double kRescale = 1e250;
  const double log_rescale = std::log(kRescale);
  for (int k = 0; k < m; ++k) {
    const double xx = x(k);
    double prev = 0.0;
    double cur = 1.0;
    double log_scale = -0.5 * xx - half_log_gamma;
    for (int i = 0; i < count; ++i) {
      values(k, i) =
          cur == 0.0 ? 0.0
                     : std::copysign(std::exp(log_scale + std::log(std::abs(cur))), cur);
      double next = ((2.0 * i + 1.0 + a - xx) * cur - std::sqrt(i * (i + a)) * prev) /
                    std::sqrt((i + 1.0) * (i + 1.0 + a));
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescale) {
        cur /= kRescale;
        prev /= kRescale;
        log_scale += log_rescale;
      }
    }
  }
  return values;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
  double prev = 0.0;
  double cur = 1.0;
  for (int i = 0; i < n; ++i) {
    double next = ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace salpeter
