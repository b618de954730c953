#include <doctest.h>

#include <cmath>

#include "salpeter/hydrogen.hpp"
#include "salpeter/perturbation.hpp"

using namespace salpeter;

namespace {
const PhysicalParams kHydrogen{1.0, 7.2973525693e-3};
}

TEST_CASE("epsilon: frozen values and cancellation-free evaluation") {
  CHECK(epsilon_exact(1, kHydrogen.alpha) ==
        doctest::Approx(2.6626031733117582e-5).epsilon(1e-15));
  CHECK(epsilon_exact(3, 0.2) == doctest::Approx(0.010025125786760091).epsilon(1e-15));
  CHECK(epsilon_approx(3, 0.2) == doctest::Approx(0.01).epsilon(1e-15));
  // direct subtraction loses ~10 digits at the physical coupling; the stable
  // form must still agree with it to the digits the naive form retains
  const double kappa = 1.0;
  const double naive = kappa - std::sqrt(kappa * kappa - kHydrogen.alpha * kHydrogen.alpha);
  CHECK(epsilon_exact(1, kHydrogen.alpha) == doctest::Approx(naive).epsilon(1e-10));
  CHECK_THROWS_AS(epsilon_exact(1, 1.5), std::domain_error);
}

TEST_CASE("truncation remainder stays inside the alpha^4 bound") {
  for (int two_j : {1, 3, 5}) {
    const double kappa = 0.5 * (two_j + 1);
    for (double alpha : {0.05, 0.1, 0.2, 0.3}) {
      const double diff = std::abs(epsilon_exact(two_j, alpha) - epsilon_approx(two_j, alpha));
      CHECK(diff <= 1.1 * std::pow(alpha, 4) / (8.0 * kappa * kappa * kappa));
    }
  }
}

TEST_CASE("lambda_value reduces to l at alpha = 0 limit and matches frozen value") {
  CHECK(lambda_value(1, 3, 1e-8) == doctest::Approx(1.0).epsilon(1e-12));
  // l=0, j=1/2, alpha=0.5: lambda = -eps = sqrt(3)/2 - 1
  CHECK(lambda_value(0, 1, 0.5) ==
        doctest::Approx(0.8660254037844386 - 1.0).epsilon(1e-14));
}

TEST_CASE("kinetic correction: closed form equals the operator route") {
  for (int n : {1, 2, 4, 6}) {
    for (int l = 0; l < n; ++l) {
      const double direct = delta_E10(n, l, kHydrogen);
      const double composed = delta_E10_operator_route(n, l, kHydrogen);
      CHECK(direct == doctest::Approx(composed).epsilon(1e-13));
    }
  }
}

TEST_CASE("ground-state breakdown: -5/8, +1/2, -1/8 in units of m alpha^4") {
  const PhysicalParams params{1.0, 0.1};
  const double ma4 = std::pow(params.alpha, 4);
  const auto b = breakdown(QuantumNumbers::make(1, 0, 1, 1), CouplingSign::Plus, params);
  CHECK(b.delta_e10 == doctest::Approx(-0.625 * ma4).epsilon(1e-13));
  CHECK(b.delta_e11 == doctest::Approx(0.5 * ma4).epsilon(1e-13));
  CHECK(b.delta_e10 + b.delta_e11 == doctest::Approx(-0.125 * ma4).epsilon(1e-13));
  CHECK(b.total == doctest::Approx(energy_alpha4(1, 1, params)).epsilon(1e-15));
}

TEST_CASE("total depends only on (n, j): cancellation across l = j -+ 1/2") {
  for (double alpha : {kHydrogen.alpha, 0.2}) {
    const PhysicalParams params{1.0, alpha};
    for (int n = 2; n <= 6; ++n) {
      for (int two_j = 1; two_j <= 2 * n - 3; two_j += 2) {
        const auto low = breakdown(QuantumNumbers::make(n, (two_j - 1) / 2, two_j, 1),
                                   CouplingSign::Plus, params);
        const auto high = breakdown(QuantumNumbers::make(n, (two_j + 1) / 2, two_j, 1),
                                    CouplingSign::Plus, params);
        CHECK(std::abs(low.total - high.total) <= 1e-14 * std::abs(low.total));
      }
    }
  }
}

TEST_CASE("coupling sign never reaches the energy: bit-identical totals") {
  const PhysicalParams params{1.0, 0.15};
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int two_j : {2 * l - 1, 2 * l + 1}) {
        if (two_j < 1) continue;
        const auto plus = breakdown(QuantumNumbers::make(n, l, two_j, 1),
                                    CouplingSign::Plus, params);
        const auto minus = breakdown(QuantumNumbers::make(n, l, two_j, 1),
                                     CouplingSign::Minus, params);
        CHECK(plus.total == minus.total);  // bitwise
      }
    }
  }
}

TEST_CASE("energy_alpha4 frozen value at the physical coupling") {
  CHECK(energy_alpha4(1, 1, kHydrogen) ==
        doctest::Approx(-2.6626031723679441e-5).epsilon(1e-15));
}
