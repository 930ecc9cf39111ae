#include <doctest.h>

#include <cmath>

#include "ratquad/oracle.hpp"

using namespace ratquad;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("oracle: classic closed forms") {
  auto a = oracle::axis([](double x) { return 1.0 / (x * x + 1.0); });
  REQUIRE(a.converged);
  CHECK(std::abs(a.value - kPi) < 1e-10);

  auto s = oracle::segment([](double x) { return (2 * x + 1) * (2 * x + 1); });
  REQUIRE(s.converged);
  CHECK(std::abs(s.value - 3 * kPi) < 1e-9);

  auto h = oracle::semiaxis([](double x) { return 1.0 / (x + 1.0); }, oracle::Weight::InvSqrt);
  REQUIRE(h.converged);
  CHECK(std::abs(h.value - kPi) < 1e-10);

  auto w = oracle::semiaxis([](double x) { return 1.0 / ((x + 1) * (x + 1)); },
                            oracle::Weight::Sqrt);
  REQUIRE(w.converged);
  CHECK(std::abs(w.value - 0.5 * kPi) < 1e-10);

  // int_0^{2pi} dtheta / |e^{i theta} - 2|^2 = 2 pi / 3
  auto c = oracle::circle(
      [](double th) { return 1.0 / (5.0 - 4.0 * std::cos(th)); }, 1.0);
  REQUIRE(c.converged);
  CHECK(std::abs(c.value - 2.0 * kPi / 3.0) < 1e-10);
}

TEST_CASE("oracle: error estimate honesty on closed forms") {
  // families with known values; true error must stay within 3x the estimate
  int checked = 0;
  for (int k = 1; k <= 20; ++k) {
    const double c = 0.15 * k;
    auto e = oracle::axis([c](double x) { return 1.0 / (x * x + c * c); });
    REQUIRE(e.converged);
    const double truth = kPi / c;
    CHECK(std::abs(e.value - truth) <= 3.0 * e.error_estimate + 1e-13 * truth);
    ++checked;
  }
  for (int k = 1; k <= 15; ++k) {
    const double a = 1.0 + 0.35 * k;  // > 1
    auto e = oracle::circle(
        [a](double th) { return 1.0 / (a - std::cos(th)); }, 1.0);
    REQUIRE(e.converged);
    const double truth = 2.0 * kPi / std::sqrt(a * a - 1.0);
    CHECK(std::abs(e.value - truth) <= 3.0 * e.error_estimate + 1e-13 * truth);
    ++checked;
  }
  for (int k = 1; k <= 15; ++k) {
    const double c = 0.3 * k;
    auto e = oracle::semiaxis([c](double x) { return 1.0 / (x + c); },
                              oracle::Weight::InvSqrt);
    REQUIRE(e.converged);
    const double truth = kPi / std::sqrt(c);
    CHECK(std::abs(e.value - truth) <= 3.0 * e.error_estimate + 1e-13 * truth);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("oracle: divergent integrand reports non-convergence") {
  auto e = oracle::integrate_interval([](double x) { return 1.0 / std::abs(x - 0.3); }, 0.0,
                                      1.0, 1e-10);
  CHECK(!e.converged);
}

TEST_CASE("oracle: near-contour peak still converges") {
  // |R|^2 with a pole at distance 0.05 from the circle
  auto e = oracle::circle(
      [](double th) {
        Complex z(std::cos(th), std::sin(th));
        return 1.0 / std::norm(z - Complex(0.95, 0.0));
      },
      1.0);
  REQUIRE(e.converged);
  // exact: 2 pi / (1 - 0.95^2)
  CHECK(std::abs(e.value - 2.0 * kPi / (1.0 - 0.9025)) < 1e-8 * e.value);
}

TEST_CASE("oracle: zero-length interval") {
  auto e = oracle::integrate_interval([](double) { return 1.0; }, 2.0, 2.0);
  CHECK(e.converged);
  CHECK(e.value == 0.0);
}
