#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ratquad/notches.hpp"
#include "ratquad/oracle.hpp"
#include "ratquad/randgen.hpp"

using namespace ratquad;

namespace {
constexpr double kPi = 3.14159265358979323846;

PoleSet disc_set(std::vector<Pole> entries, double r = 1.0) {
  PoleSet ps;
  ps.entries = std::move(entries);
  ps.total = 0;
  for (const auto& p : ps.entries) ps.total += p.multiplicity;
  ps.region = Region::Disc;
  ps.radius = r;
  return ps;
}

PoleSet upper_set(std::vector<Pole> entries) {
  PoleSet ps = disc_set(std::move(entries));
  ps.region = Region::UpperHalfPlane;
  return ps;
}

bool has_param_near(const NotchSet& ns, double value, double tol = 1e-10) {
  for (int k = 0; k < ns.finite_count(); ++k)
    if (std::abs(ns.params[k] - value) < tol) return true;
  return false;
}
}  // namespace

TEST_CASE("notches_circle: closed forms") {
  // B = zeta: zeta^2 = 1 -> {1, -1}
  NotchSet a = notches_circle(disc_set({{Complex(0, 0), 1}}), 1.0, 1, 0.0);
  REQUIRE(a.count() == 2);
  CHECK(has_param_near(a, 0.0));
  CHECK(has_param_near(a, kPi));

  // zeta^2 = e^{i pi/2} -> {e^{i pi/4}, e^{i 5pi/4}}
  NotchSet b = notches_circle(disc_set({{Complex(0, 0), 1}}), 1.0, 1, 0.5 * kPi);
  REQUIRE(b.count() == 2);
  CHECK(has_param_near(b, 0.25 * kPi));
  CHECK(has_param_near(b, 1.25 * kPi));

  // pole 0.5: zeta (zeta - .5)/(1 - .5 zeta) = 1 reduces to zeta^2 = 1
  NotchSet c = notches_circle(disc_set({{Complex(0.5, 0), 1}}), 1.0, 1, 0.0);
  REQUIRE(c.count() == 2);
  CHECK(has_param_near(c, 0.0));
  CHECK(has_param_near(c, kPi));
  for (double res : c.residuals) CHECK(res < 1e-12);

  // count formula: total 3, m = 3 -> 10 nodes
  NotchSet d = notches_circle(disc_set({{Complex(0.5, 0), 2}, {Complex(0, -0.3), 1}}), 1.0, 3,
                              1.234);
  CHECK(d.count() == 10);
}

TEST_CASE("notches_axis: closed forms") {
  PoleSet ps = upper_set({{Complex(0, 1), 1}});

  // (x - i)/(x + i) = -1 -> x = 0
  NotchSet a = notches_axis(ps, 1, kPi);
  REQUIRE(a.count() == 1);
  CHECK(!a.infinite_node);
  CHECK(std::abs(a.params[0]) < 1e-12);

  // phi = 0: the single notch is at infinity
  NotchSet b = notches_axis(ps, 1, 0.0);
  REQUIRE(b.count() == 1);
  CHECK(b.infinite_node);
  CHECK(b.nodes[0].at_infinity);
  CHECK(b.mu.empty());

  // ((x - i)/(x + i))^2 = -1 -> v = +-i -> x = -+1
  NotchSet c = notches_axis(ps, 2, kPi);
  REQUIRE(c.count() == 2);
  CHECK(has_param_near(c, -1.0));
  CHECK(has_param_near(c, 1.0));

  // ((x - i)/(x + i))^2 = e^{i 3pi/2} -> x = 1 -+ sqrt(2)
  NotchSet d = notches_axis(ps, 2, 1.5 * kPi);
  REQUIRE(d.count() == 2);
  CHECK(has_param_near(d, 1.0 - std::sqrt(2.0)));
  CHECK(has_param_near(d, 1.0 + std::sqrt(2.0)));
  CHECK(std::is_sorted(d.params.begin(), d.params.end()));
}

TEST_CASE("notches_semiaxis: lifted sets") {
  // lift of 1/(z+1) is {(i,2)}: B^2 = -1 has roots -1, 1 (symmetric pair)
  RationalFunction R = make_rational({1.0}, {{Complex(-1, 0), 1}});
  PoleSet lift = semiaxis_lift(R);
  NotchSet a = notches_semiaxis(lift, 1, kPi);
  REQUIRE(a.count() == 2);
  CHECK(has_param_near(a, -1.0));
  CHECK(has_param_near(a, 1.0));

  // count 2 m n with n = deg R = 2 -> 8
  RationalFunction R2 = make_rational({1.0}, {{Complex(-1, 0.4), 1}, {Complex(0.3, 2.0), 1}});
  NotchSet b = notches_semiaxis(semiaxis_lift(R2), 2, 0.777);
  CHECK(b.count() == 8);

  // phi = pi is self-symmetric: the node multiset is even under x -> -x
  for (int k = 0; k < a.count(); ++k) CHECK(has_param_near(a, -a.params[k], 1e-9));
  NotchSet c = notches_semiaxis(semiaxis_lift(R2), 1, kPi);
  for (int k = 0; k < c.count(); ++k) CHECK(has_param_near(c, -c.params[k], 1e-9));

  // non-symmetric pole set rejected
  CHECK_THROWS_AS(notches_semiaxis(upper_set({{Complex(1, 1), 1}}), 1, 1.0), Error);
}

TEST_CASE("notches_segment: polynomial case and counts") {
  // n = 1 polynomial: zeta^3 = 1; x-projections {1, -1/2, -1/2}
  NotchSet a = notches_segment(disc_set({{Complex(0, 0), 2}}), 1, 0.0);
  REQUIRE(a.count() == 3);
  CHECK(std::abs(a.params[0] - 0.0) < 1e-12);
  CHECK(std::abs(a.params[1] - 2.0 * kPi / 3.0) < 1e-12);
  CHECK(std::abs(a.params[2] - 4.0 * kPi / 3.0) < 1e-12);
  CHECK(std::abs(a.x_proj[0] - 1.0) < 1e-12);
  CHECK(std::abs(a.x_proj[1] + 0.5) < 1e-12);
  CHECK(std::abs(a.x_proj[2] + 0.5) < 1e-12);

  // counts: n = 2 (lift total 4), m = 2 -> 9 zeta-nodes
  RationalFunction R = make_rational({1.0}, {{Complex(2, 0), 1}, {Complex(0, 2), 1}});
  NotchSet b = notches_segment(segment_lift(R), 2, 1.234);
  CHECK(b.count() == 9);
  for (double res : b.residuals) CHECK(res <= 1e-10);
}

TEST_CASE("notches: residuals, distinctness, ordering") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    RationalFunction R = random_rational(rng, Domain::Circle);
    const int m = rng.uniform_int(1, 3);
    const double phi = rng.uniform(0.0, 2 * kPi);
    NotchSet ns = notches_circle(reflect_circle(R, 1.0), 1.0, m, phi);
    CHECK(ns.count() == m * R.degree() + 1);
    CHECK(std::is_sorted(ns.params.begin(), ns.params.end()));
    for (double res : ns.residuals) CHECK(res <= 1e-10);
    for (int k = 1; k < ns.count(); ++k) CHECK(ns.params[k] - ns.params[k - 1] > 0.0);
    for (double mu : ns.mu) CHECK(mu > 0.0);
  }
  for (int trial = 0; trial < 10; ++trial) {
    RationalFunction R = random_rational(rng, Domain::Axis);
    const int m = rng.uniform_int(1, 3);
    const double phi = rng.uniform(0.05, 2 * kPi - 0.05);
    NotchSet ns = notches_axis(reflect_axis(R), m, phi);
    CHECK(ns.count() == m * R.degree());
    CHECK(std::is_sorted(ns.params.begin(), ns.params.end()));
    for (double res : ns.residuals) CHECK(res <= 1e-10);
  }
}

TEST_CASE("notches: interlacing via the phase integral") {
  // between consecutive nodes the unwrapped phase gains exactly 2 pi
  PoleSet ps = disc_set({{Complex(0.4, 0.2), 2}, {Complex(-0.1, -0.55), 1}});
  const int m = 2;
  NotchSet ns = notches_circle(ps, 1.0, m, 0.8);
  BlaschkeCircle b{ps, 1.0};
  for (int k = 1; k < ns.count(); ++k) {
    auto est = oracle::integrate_interval(
        [&](double th) { return phase_derivative(b, m, th); }, ns.params[k - 1], ns.params[k],
        1e-12);
    REQUIRE(est.converged);
    CHECK(std::abs(est.value - 2.0 * kPi) < 1e-9);
  }
}

TEST_CASE("notches: sweep continuity in phi") {
  PoleSet ps = disc_set({{Complex(0.3, 0.4), 1}, {Complex(-0.5, 0.1), 2}});
  const int m = 1;
  const double phi = 1.0, dphi = 1e-3;
  NotchSet n0 = notches_circle(ps, 1.0, m, phi);
  NotchSet n1 = notches_circle(ps, 1.0, m, phi + dphi);
  REQUIRE(n0.count() == n1.count());
  BlaschkeCircle b{ps, 1.0};
  double min_deriv = 1e300;
  for (int k = 0; k < 720; ++k)
    min_deriv = std::min(min_deriv, phase_derivative(b, m, 2 * kPi * k / 720.0));
  for (int k = 0; k < n0.count(); ++k)
    CHECK(std::abs(n1.params[k] - n0.params[k]) <= dphi / min_deriv + 1e-9);

  // tracking one node through a full 2 pi sweep lands on its successor
  for (int start = 0; start < n0.count(); ++start) {
    double tracked = n0.params[start];
    const int steps = 256;
    for (int s = 1; s <= steps; ++s) {
      NotchSet ns = notches_circle(ps, 1.0, m, phi + 2 * kPi * s / steps);
      double best = 1e300, best_param = tracked;
      for (double p : ns.params) {
        double d = std::abs(std::remainder(p - tracked, 2 * kPi));
        if (d < best) {
          best = d;
          best_param = p;
        }
      }
      // steps are fine enough that the nearest node is the tracked one
      REQUIRE(best < kPi / n0.count());
      tracked = best_param;
    }
    const int succ = (start + 1) % n0.count();
    CHECK(std::abs(std::remainder(tracked - n0.params[succ], 2 * kPi)) < 1e-9);
  }
}

TEST_CASE("notches: prescribed-node round trip") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    RationalFunction R = random_rational(rng, Domain::Circle);
    PoleSet ps = reflect_circle(R, 1.0);
    const int m = rng.uniform_int(1, 2);
    const double theta = rng.uniform(0.0, 2 * kPi);
    const double phi = prescribe_phi_circle(ps, 1.0, m, theta);
    NotchSet ns = notches_circle(ps, 1.0, m, phi);
    double best = 1e300;
    for (double p : ns.params)
      best = std::min(best, std::abs(std::remainder(p - theta, 2 * kPi)));
    CHECK(best <= 1e-10);
  }
  for (int trial = 0; trial < 20; ++trial) {
    RationalFunction R = random_rational(rng, Domain::Axis);
    PoleSet ps = reflect_axis(R);
    const int m = rng.uniform_int(1, 2);
    const double x = rng.uniform(-5.0, 5.0);
    const double phi = prescribe_phi_axis(ps, m, x);
    NotchSet ns = notches_axis(ps, m, phi);
    CHECK(has_param_near(ns, x, 1e-10));
  }
}

TEST_CASE("notches: error paths") {
  PoleSet empty;
  empty.region = Region::Disc;
  CHECK_THROWS_AS(notches_circle(empty, 1.0, 1, 0.0), Error);
  try {
    notches_circle(empty, 1.0, 1, 0.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleSetEmpty);
  }
  // pole set not inside the disc
  CHECK_THROWS_AS(notches_circle(disc_set({{Complex(2, 0), 1}}), 1.0, 1, 0.0), Error);
  CHECK_THROWS_AS(notches_axis(disc_set({{Complex(0, -1), 1}}), 1, 0.0), Error);
}
