#include <doctest.h>

#include <cmath>

#include "ratquad/blaschke.hpp"
#include "ratquad/oracle.hpp"
#include "ratquad/quadrature.hpp"
#include "ratquad/randgen.hpp"

using namespace ratquad;

namespace {
constexpr double kPi = 3.14159265358979323846;

RationalFunction single_pole(Complex z0) { return make_rational({1.0}, {{z0, 1}}); }
}  // namespace

TEST_CASE("integrate_circle: analytic checks") {
  // pole outside: mean value 2 pi R(0) = -pi
  QuadratureResult a = integrate_circle(single_pole(2.0), 1.0, 0.3);
  CHECK(std::abs(a.value - Complex(-kPi, 0)) < 1e-12);

  // pole inside: the contour average of 1/(zeta - 0.5) vanishes
  QuadratureResult b = integrate_circle(single_pole(0.5), 1.0, 0.0);
  CHECK(std::abs(b.value) < 1e-12);
  auto ore = oracle::circle(
      [](double th) { return (1.0 / (Complex(std::cos(th), std::sin(th)) - 0.5)).real(); }, 1.0);
  REQUIRE(ore.converged);
  CHECK(std::abs(b.value.real() - ore.value) < 1e-10);

  // value equals the contribution sum by construction
  Complex s = 0.0;
  for (auto c : b.contributions) s += c;
  CHECK(std::abs(s - b.value) < 1e-15);
}

TEST_CASE("norm_circle_2m: closed forms") {
  CHECK(norm_circle_2m(single_pole(0.5), 1.0, 1, 0.0).real() ==
        doctest::Approx(8.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(norm_circle_2m(single_pole(2.0), 1.0, 1, 1.7).real() ==
        doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));

  auto o4 = oracle::circle(
      [](double th) {
        return 1.0 / std::pow(std::norm(Complex(std::cos(th), std::sin(th)) - 0.5), 2);
      },
      1.0);
  REQUIRE(o4.converged);
  CHECK(norm_circle_2m(single_pole(0.5), 1.0, 2, 0.9).real() ==
        doctest::Approx(o4.value).epsilon(1e-9));
}

TEST_CASE("axis engines: closed forms and the infinite notch") {
  RationalFunction R = single_pole(Complex(0, 1));

  CHECK(norm_axis_2m(R, 1, kPi).real() == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(norm_axis_2m(R, 2, kPi).real() == doctest::Approx(0.5 * kPi).epsilon(1e-13));

  // norm at phi = 0: the only notch is at infinity; its limiting term
  // |leading|^2 / mu_mass carries the whole value
  QuadratureResult n0 = norm_axis_2m(R, 1, 0.0);
  CHECK(n0.dropped_inf);
  CHECK(n0.real() == doctest::Approx(kPi).epsilon(1e-13));

  // int (x - i)^{-2} dx = 0, generic phi and the infinite-notch case
  CHECK(std::abs(integrate_axis(R, 2, 1.1).value) < 1e-12);
  CHECK(std::abs(integrate_axis(R, 2, 0.0).value) < 1e-12);

  // residue check: int dx/((x-i)(x-2i)) = 0
  RationalFunction R2 = make_rational({1.0}, {{Complex(0, 1), 1}, {Complex(0, 2), 1}});
  QuadratureResult q2 = integrate_axis(R2, 1, 2.2);
  auto ore = oracle::axis([&](double x) { return eval(R2, Complex(x, 0)).real(); });
  auto oim = oracle::axis([&](double x) { return eval(R2, Complex(x, 0)).imag(); });
  REQUIRE(ore.converged);
  REQUIRE(oim.converged);
  CHECK(std::abs(q2.value - Complex(ore.value, oim.value)) < 1e-9);
  CHECK(std::abs(q2.value) < 1e-9);
}

TEST_CASE("axis engines: validation") {
  RationalFunction R = single_pole(Complex(0, 1));
  CHECK_THROWS_AS(integrate_axis(R, 1, 0.5), Error);  // gap 1, m 1: divergent
  try {
    integrate_axis(R, 1, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivergentIntegral);
  }
  RationalFunction improper = make_rational({0.0, 0.0, 1.0}, {{Complex(0, 1), 1}});
  CHECK_THROWS_AS(norm_axis_2m(improper, 1, 0.5), Error);
  RationalFunction constant = make_rational({1.0}, {});
  CHECK_THROWS_AS(norm_circle_2m(constant, 1.0, 1, 0.5), Error);  // empty pole set
  CHECK_THROWS_AS(norm_axis_2m(constant, 1, 0.5), Error);
}

TEST_CASE("semiaxis engines: closed forms") {
  RationalFunction R = single_pole(-1.0);
  CHECK(integrate_semiaxis(R, 1, 0.7, SemiaxisWeight::InvSqrt).value.real() ==
        doctest::Approx(kPi).epsilon(1e-13));
  CHECK(norm_semiaxis_2m(R, 1, 0.7, SemiaxisWeight::InvSqrt).real() ==
        doctest::Approx(0.5 * kPi).epsilon(1e-13));

  // sqrt weight: int sqrt(x)/(x+1)^2 dx = pi/2
  RationalFunction R2 = make_rational({1.0}, {{Complex(-1, 0), 2}});
  CHECK(integrate_semiaxis(R2, 1, 0.7, SemiaxisWeight::Sqrt).value.real() ==
        doctest::Approx(0.5 * kPi).epsilon(1e-13));
  // sqrt-weight norm of 1/(x+1): int x^{1/2}/(x+1)^2 = pi/2 again (m = 1)
  CHECK(norm_semiaxis_2m(R, 1, 0.7, SemiaxisWeight::Sqrt).real() ==
        doctest::Approx(0.5 * kPi).epsilon(1e-13));

  // infinite-notch cases at phi = 0
  CHECK(integrate_semiaxis(R, 1, 0.0, SemiaxisWeight::InvSqrt).value.real() ==
        doctest::Approx(kPi).epsilon(1e-13));
  CHECK(norm_semiaxis_2m(R, 1, 0.0, SemiaxisWeight::Sqrt).real() ==
        doctest::Approx(0.5 * kPi).epsilon(1e-13));

  // sqrt-weight integral diverges for m * gap < 2
  CHECK_THROWS_AS(integrate_semiaxis(R, 1, 0.7, SemiaxisWeight::Sqrt), Error);
}

TEST_CASE("segment engines: closed forms") {
  // (2x+1): norm-squared against the Chebyshev weight is 3 pi
  RationalFunction P1 = make_rational({1.0, 2.0}, {});
  CHECK(norm_segment_2m(P1, 1, 0.4).real() == doctest::Approx(3.0 * kPi).epsilon(1e-12));

  // at phi = 0 all nodes but x = 1 kill the Dirichlet-kernel polynomial:
  // the norm collapses to (2n+1) pi
  CHECK(norm_segment_2m(P1, 1, 0.0).real() == doctest::Approx(3.0 * kPi).epsilon(1e-12));
  RationalFunction P2 = make_rational({-1.0, 2.0, 4.0}, {});
  CHECK(norm_segment_2m(P2, 1, 0.0).real() == doctest::Approx(5.0 * kPi).epsilon(1e-12));

  // int omega(x)/(x-2) dx = -pi/sqrt(3)
  QuadratureResult q = integrate_segment(single_pole(2.0), 1.3);
  CHECK(q.value.real() == doctest::Approx(-kPi / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::abs(q.value.imag()) < 1e-12);
}

TEST_CASE("quadrature: randomized oracle agreement") {
  Rng rng(47);
  for (int i = 0; i < 8; ++i) {
    RationalFunction R = random_rational(rng, Domain::Circle);
    const int m = rng.uniform_int(1, 2);
    double q = norm_circle_2m(R, 1.0, m, rng.uniform(0.1, 6.0)).real();
    auto o = oracle::circle(
        [&](double th) {
          return std::pow(std::abs(eval(R, Complex(std::cos(th), std::sin(th)))), 2.0 * m);
        },
        1.0);
    REQUIRE(o.converged);
    CHECK(std::abs(q - o.value) <= 1e-8 * (1.0 + std::abs(o.value)));
  }
  for (int i = 0; i < 8; ++i) {
    RationalFunction R = random_rational(rng, Domain::Segment);
    const int m = rng.uniform_int(1, 2);
    double q = norm_segment_2m(R, m, rng.uniform(0.1, 6.0)).real();
    auto o = oracle::segment(
        [&](double x) { return std::pow(std::abs(eval(R, Complex(x, 0))), 2.0 * m); });
    REQUIRE(o.converged);
    CHECK(std::abs(q - o.value) <= 1e-8 * (1.0 + std::abs(o.value)));
  }
}

TEST_CASE("quadrature: phi-invariance and positivity") {
  Rng rng(53);
  for (int i = 0; i < 6; ++i) {
    RationalFunction R = random_rational(rng, Domain::Axis);
    const int m = rng.uniform_int(1, 3);
    double first = norm_axis_2m(R, m, 0.37).real();
    CHECK(first > 0.0);
    for (int k = 0; k < 6; ++k) {
      QuadratureResult q = norm_axis_2m(R, m, rng.uniform(0.05, 2 * kPi - 0.05));
      CHECK(std::abs(q.real() - first) <= 1e-9 * first);
      double maxc = 0.0;
      for (auto c : q.contributions) {
        CHECK(c.real() >= 0.0);
        maxc = std::max(maxc, c.real());
      }
      CHECK(q.real() >= maxc - 1e-12 * q.real());
    }
  }
}

TEST_CASE("quadrature: fixed-cell identity is subsumed") {
  // R with poles on a symmetrized cell set: 0 (mult 1), 0.5 (mult 2),
  // 2 = reflection of 0.5 (mult 2), infinity (mult 1); cells {0, 0.5}, s = 2
  std::vector<Complex> num(7, Complex(1.0, 0.0));
  RationalFunction R = make_rational(
      std::move(num), {{Complex(0, 0), 1}, {Complex(0.5, 0), 2}, {Complex(2, 0), 2}});
  const double phi = 0.83;

  // engine route
  const double engine = norm_circle_2m(R, 1.0, 1, phi).real();

  // fixed-cell route: notches of Bhat^4 = e^{i phi} via fourth roots, with
  // the cell weight muhat = 1 + 0.75/|zeta - 0.5|^2
  PoleSet cell;
  cell.entries = {{Complex(0.5, 0), 1}};
  cell.total = 1;
  cell.region = Region::Disc;
  cell.radius = 1.0;
  double sum = 0.0;
  int count = 0;
  for (int j = 0; j < 4; ++j) {
    const double psi = (phi + 2.0 * kPi * j) / 4.0;
    NotchSet ns = notches_circle(cell, 1.0, 1, psi);
    for (int k = 0; k < ns.count(); ++k) {
      const Complex z = ns.nodes[k].value();
      const double muhat = 1.0 + 0.75 / std::norm(z - Complex(0.5, 0));
      sum += std::norm(eval(R, z)) / muhat;
      ++count;
    }
  }
  CHECK(count == 8);
  const double fixed_cell = 0.5 * kPi * sum;  // pi r/(m s), m = 1, s = 2

  auto o = oracle::circle(
      [&](double th) { return std::norm(eval(R, Complex(std::cos(th), std::sin(th)))); }, 1.0);
  REQUIRE(o.converged);
  CHECK(std::abs(engine - o.value) <= 1e-8 * (1.0 + o.value));
  CHECK(std::abs(fixed_cell - o.value) <= 1e-8 * (1.0 + o.value));
  CHECK(std::abs(engine - fixed_cell) <= 1e-8 * (1.0 + std::abs(engine)));
}
