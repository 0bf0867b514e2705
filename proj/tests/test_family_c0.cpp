#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "splq/errors.hpp"
#include "splq/family_c0.hpp"

using namespace splq;

namespace {

double moment_weighted(int k) {
  // int_{-1}^{1} (1 - x) x^k dx
  const double even = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
  const double odd = (k % 2 == 1) ? 2.0 / (k + 2) : 0.0;
  return even - odd;
}

}  // namespace

TEST_CASE("Q_n(0, x) is P_n^{(1,0)}") {
  for (int n = 1; n <= 10; ++n)
    for (double x = -1.0; x <= 1.0; x += 0.1)
      CHECK(std::abs(q_eval_c0({0.0}, n, x).value - oracle::jacobi_sum(n, 1, 0, x)) < 1e-12 * oracle::binomial(n + 1, n));
  CHECK(std::abs(q_eval_c0({0.0}, 1, -1.0 / 3.0).value) < 1e-15);
}

TEST_CASE("M_n(0, 0, x) is Legendre") {
  for (int n = 1; n <= 10; ++n)
    for (double x = -1.0; x <= 1.0; x += 0.1)
      CHECK(std::abs(m_eval_c0({0.0}, {0.0}, n, x).value - oracle::jacobi_sum(n, 0, 0, x)) < 1e-13);
}

TEST_CASE("Q_n has exact degree n") {
  for (double a : {-0.2, 0.0, 0.1, 0.25, 0.5}) {
    for (int n = 1; n <= 10; ++n) {
      const auto c = chebyshev_coefficients([&](double x) { return q_eval_c0({a}, n, x).value; }, n + 2);
      double cmax = 0.0;
      for (double v : c) cmax = std::max(cmax, std::abs(v));
      CHECK(std::abs(c[n]) > 1e-8 * cmax);
      CHECK(std::abs(c[n + 1]) < 1e-13 * cmax);
    }
  }
}

TEST_CASE("boundary rule at alpha = 0 carries Gauss-Jacobi weights for (1 - x)") {
  CHECK(boundary_rule_c0({0.0}, 1).nodes[0] == doctest::Approx(-1.0 / 3.0));
  CHECK(boundary_rule_c0({0.0}, 1).weights[0] == doctest::Approx(1.5).epsilon(1e-14));
  for (int n = 1; n <= 8; ++n) {
    const auto r = boundary_rule_c0({0.0}, n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += r.weights[i] * (1.0 - r.nodes[i]) * std::pow(r.nodes[i], k);
      CHECK(q == doctest::Approx(moment_weighted(k)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("omega-combined boundary rule") {
  const auto r = boundary_rule_c0({0.0}, 1, -1.0);
  CHECK(r.nodes[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // first subinterval of the 2-node half rule on lengths 1, 2: omega from lambda = 2
  const auto h = boundary_rule_c0({0.0}, 2, omega_pair_c0({0.0}, 2, 2.0));
  const double s = std::sqrt(22.0);
  CHECK((h.nodes[0] + 1) / 2 == doctest::Approx(4.0 / 7.0 - s / 14.0).epsilon(1e-14));
  CHECK((h.nodes[1] + 1) / 2 == doctest::Approx(4.0 / 7.0 + s / 14.0).epsilon(1e-14));
  CHECK(h.weights[0] / 2 == doctest::Approx(2.0 / 3.0 - s / 44.0).epsilon(1e-14));
  CHECK(h.weights[1] / 2 == doctest::Approx(2.0 / 3.0 + s / 44.0).epsilon(1e-14));
}

TEST_CASE("alpha recursion") {
  CHECK(step_alpha({0.0}, 1, 1.0).alpha == doctest::Approx(0.25).epsilon(1e-16));
  CHECK(step_alpha({0.0}, 1, 2.0).alpha == doctest::Approx(0.125).epsilon(1e-16));
  CHECK(step_alpha({0.0}, 1, 1.0, 0.0).alpha == doctest::Approx(0.25).epsilon(1e-16));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ua(-0.1, 0.5), ul(0.25, 4.0);
  for (int k = 0; k < 50; ++k) {
    const double a = ua(rng), l = ul(rng);
    for (int n = 1; n <= 8; ++n)
      CHECK(step_alpha({a}, n, l, 0.0).alpha == doctest::Approx(step_alpha({a}, n, l).alpha).epsilon(1e-13));
  }
  // Gamma = 0 at alpha = -1/(n(n+2))
  CHECK_THROWS_AS(step_alpha({-1.0 / 3.0}, 1, 1.0), degenerate_denominator);
}

TEST_CASE("pair omega") {
  for (int n = 1; n <= 8; ++n) CHECK(omega_pair_c0({0.0}, n, 1.0) == doctest::Approx(-1.0));
  CHECK(omega_pair_c0({0.0}, 1, 2.0) == doctest::Approx(-5.0 / 4.0).epsilon(1e-15));
  CHECK(omega_pair_c0({0.25}, 1, 1.0) == doctest::Approx(-11.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("pair omega kills the lowest Gegenbauer term of the next Q_{n-1}") {
  // Q_{n-1} = (C_{n-1} F(n-1) + C_{n-2} F(n)) / n, so F(n) must vanish after the step
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> ua(-0.1, 0.5), ul(0.25, 4.0);
  for (int k = 0; k < 50; ++k) {
    const double a = ua(rng), l = ul(rng);
    for (int n = 1; n <= 8; ++n) {
      const auto next = step_alpha({a}, n, l, omega_pair_c0({a}, n, l));
      CHECK(std::abs(f_c0(n, next.alpha)) < 1e-12);
    }
  }
}

TEST_CASE("middle rule reductions") {
  const auto r2 = middle_rule_c0({0.0}, {0.0}, 2, 0.0);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
  const auto r1 = middle_rule_c0({0.0}, {0.0}, 1, 0.0);
  CHECK(std::abs(r1.nodes[0]) < 1e-15);
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("middle pair parameters") {
  auto [r0, l0] = middle_pair_params_c0(0.0, 1.0);
  CHECK(r0.alpha == 0.0);
  CHECK(l0.alpha == 0.0);
  auto [r1, l1] = middle_pair_params_c0(0.3, 1.0);
  CHECK(r1.alpha == doctest::Approx(0.3));
  CHECK(l1.alpha == doctest::Approx(-0.3));
  auto [r2, l2] = middle_pair_params_c0(0.3, 2.0);
  CHECK(r2.alpha == doctest::Approx(0.3));
  CHECK(l2.alpha == doctest::Approx(-0.15));
}

TEST_CASE("Gegenbauer forms agree with the Jacobi forms") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k <= 20; ++k) {
      const double x = std::cos(std::numbers::pi * (k + 0.5) / 21);
      CHECK(gegenbauer_q_c0({0.0}, n, x) == doctest::Approx(q_eval_c0({0.0}, n, x).value).epsilon(1e-12).scale(1.0));
    }
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> ua(-0.2, 0.5), ux(-1.0, 1.0);
  std::uniform_int_distribution<int> un(1, 10), um(2, 10);
  for (int k = 0; k < 100; ++k) {
    const double a = ua(rng), x = ux(rng);
    const int n = un(rng);
    const double ref = q_eval_c0({a}, n, x).value;
    CHECK(std::abs(gegenbauer_q_c0({a}, n, x) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
    const double al = ua(rng), ar = ua(rng);
    const int m = um(rng);
    const double mref = m_eval_c0({al}, {ar}, m, x).value;
    CHECK(std::abs(gegenbauer_m_c0({al}, {ar}, m, x) - mref) <= 1e-11 * std::max(1.0, std::abs(mref)));
  }
  for (double x = -0.95; x < 1.0; x += 0.1)
    CHECK(gegenbauer_m_c0({0.25}, {0.25}, 4, x) == doctest::Approx(m_eval_c0({0.25}, {0.25}, 4, x).value).epsilon(1e-11));
}
