#include <doctest.h>

#include <cmath>

#include "ratquad/randgen.hpp"
#include "ratquad/ratfun.hpp"

using namespace ratquad;

namespace {
constexpr double kPi = 3.14159265358979323846;

RationalFunction single_pole(Complex z0) { return make_rational({1.0}, {{z0, 1}}); }

const Pole* find_pole(const PoleSet& ps, Complex z, double tol = 1e-9) {
  for (const auto& p : ps.entries)
    if (std::abs(p.location - z) < tol) return &p;
  return nullptr;
}
}  // namespace

TEST_CASE("eval: direct values") {
  // 1/(z - i) at 0 = i
  Complex v = eval(single_pole(Complex(0, 1)), Complex(0, 0));
  CHECK(std::abs(v - Complex(0, 1)) < 1e-15);

  // polynomial 2z + 1 at 1 = 3
  RationalFunction lin = make_rational({1.0, 2.0}, {});
  CHECK(std::abs(eval(lin, Complex(1, 0)) - Complex(3, 0)) < 1e-15);

  // 1/(z - 0.5) at e^{i pi/3} vs naive division
  Complex z(std::cos(kPi / 3), std::sin(kPi / 3));
  Complex naive = 1.0 / (z - 0.5);
  CHECK(std::abs(eval(single_pole(0.5), z) - naive) < 1e-14);
}

TEST_CASE("eval: at a pole") {
  CHECK_THROWS_AS(eval(single_pole(0.5), Complex(0.5, 0)), Error);
  try {
    eval(single_pole(0.5), Complex(0.5, 0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvalAtPole);
  }
}

TEST_CASE("make_rational: validation") {
  CHECK_THROWS_AS(make_rational({}, {}), Error);
  CHECK_THROWS_AS(make_rational({0.0}, {}), Error);
  CHECK_THROWS_AS(make_rational({1.0}, {{Complex(1, 0), 0}}), Error);
  CHECK_THROWS_AS(make_rational({1.0}, {{Complex(1, 0), 1}, {Complex(1, 0), 2}}), Error);
  // trailing zeros trimmed
  RationalFunction R = make_rational({1.0, 2.0, 0.0, 0.0}, {});
  CHECK(R.numerator_degree() == 1);
}

TEST_CASE("reflect_circle: examples") {
  PoleSet a = reflect_circle(single_pole(0.5), 1.0);
  REQUIRE(a.entries.size() == 1);
  CHECK(std::abs(a.entries[0].location - Complex(0.5, 0)) < 1e-15);
  CHECK(a.total == 1);

  PoleSet b = reflect_circle(single_pole(2.0), 1.0);
  REQUIRE(b.entries.size() == 1);
  CHECK(std::abs(b.entries[0].location - Complex(0.5, 0)) < 1e-15);

  // z^2/(z-2): finite pole 2 (mult 1) + pole at infinity (mult 1)
  RationalFunction c = make_rational({0.0, 0.0, 1.0}, {{Complex(2, 0), 1}});
  PoleSet ps = reflect_circle(c, 1.0);
  CHECK(ps.total == 2);
  CHECK(find_pole(ps, Complex(0.5, 0)) != nullptr);
  CHECK(find_pole(ps, Complex(0, 0)) != nullptr);
}

TEST_CASE("reflect_circle: pole on contour rejected") {
  CHECK_THROWS_AS(reflect_circle(single_pole(Complex(1.0 + 1e-9, 0)), 1.0), Error);
  CHECK_NOTHROW(reflect_circle(single_pole(Complex(1.0 + 1e-6, 0)), 1.0));
}

TEST_CASE("reflect_circle: idempotent on inside sets") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    RationalFunction R = random_rational(rng, Domain::Circle);
    std::vector<Pole> inside;
    for (const auto& p : R.poles)
      if (std::abs(p.location) < 0.9) inside.push_back(p);
    if (inside.empty()) continue;
    RationalFunction S = make_rational({1.0}, inside);
    PoleSet ps = reflect_circle(S, 1.0);
    for (const auto& p : inside) CHECK(find_pole(ps, p.location, 1e-12) != nullptr);
  }
}

TEST_CASE("reflect_axis: examples and errors") {
  PoleSet a = reflect_axis(single_pole(Complex(0, 1)));
  CHECK(find_pole(a, Complex(0, 1)) != nullptr);
  PoleSet b = reflect_axis(single_pole(Complex(0, -1)));
  CHECK(find_pole(b, Complex(0, 1)) != nullptr);

  // 1/(z^2+1): conjugate pair merges to (i, 2)
  RationalFunction c = make_rational({1.0}, {{Complex(0, 1), 1}, {Complex(0, -1), 1}});
  PoleSet ps = reflect_axis(c);
  REQUIRE(ps.entries.size() == 1);
  CHECK(ps.entries[0].multiplicity == 2);
  CHECK(std::abs(ps.entries[0].location - Complex(0, 1)) < 1e-12);
  CHECK(ps.total == 2);

  // improper rejected
  RationalFunction d = make_rational({0.0, 0.0, 1.0}, {{Complex(0, 1), 1}});
  CHECK_THROWS_AS(reflect_axis(d), Error);
  // real pole rejected
  CHECK_THROWS_AS(reflect_axis(single_pole(Complex(1.0, 1e-10))), Error);
}

TEST_CASE("semiaxis_lift: examples") {
  // pole -1 = e^{i pi}: both lifted points merge at i
  PoleSet a = semiaxis_lift(single_pole(-1.0));
  REQUIRE(a.entries.size() == 1);
  CHECK(std::abs(a.entries[0].location - Complex(0, 1)) < 1e-12);
  CHECK(a.entries[0].multiplicity == 2);
  CHECK(a.total == 2);

  // pole 4i = 4 e^{i pi/2}: {2 e^{i pi/4}, -2 e^{-i pi/4}}
  PoleSet b = semiaxis_lift(single_pole(Complex(0, 4)));
  CHECK(b.total == 2);
  Complex lift1 = 2.0 * Complex(std::cos(kPi / 4), std::sin(kPi / 4));
  Complex lift2 = -2.0 * Complex(std::cos(kPi / 4), -std::sin(kPi / 4));
  CHECK(find_pole(b, lift1) != nullptr);
  CHECK(find_pole(b, lift2) != nullptr);

  // 1/(z+1)^2 -> (i, 4)
  RationalFunction c = make_rational({1.0}, {{Complex(-1, 0), 2}});
  PoleSet ps = semiaxis_lift(c);
  REQUIRE(ps.entries.size() == 1);
  CHECK(ps.entries[0].multiplicity == 4);
  CHECK(ps.total == 4);

  CHECK_THROWS_AS(semiaxis_lift(single_pole(Complex(2.0, 0))), Error);
  CHECK_THROWS_AS(semiaxis_lift(single_pole(Complex(0.0, 0))), Error);
}

TEST_CASE("segment_lift: examples") {
  // 1/(x-2): in-disc root of z^2 - 4z + 1, kept twice
  PoleSet a = segment_lift(single_pole(2.0));
  REQUIRE(a.entries.size() == 1);
  CHECK(std::abs(a.entries[0].location - Complex(2.0 - std::sqrt(3.0), 0)) < 1e-12);
  CHECK(a.entries[0].multiplicity == 2);
  CHECK(a.total == 2);

  // polynomial of degree n: {(0, 2n)}
  RationalFunction p3 = make_rational({0.0, 0.0, 0.0, 1.0}, {});
  PoleSet b = segment_lift(p3);
  REQUIRE(b.entries.size() == 1);
  CHECK(std::abs(b.entries[0].location) < 1e-15);
  CHECK(b.entries[0].multiplicity == 6);

  // 1/(x-2i): two distinct unit-disc locations, each multiplicity 1
  PoleSet c = segment_lift(single_pole(Complex(0, 2)));
  CHECK(c.entries.size() == 2);
  CHECK(c.total == 2);
  Complex zin = Complex(0, 1) * (2.0 - std::sqrt(5.0));  // i(2 - sqrt 5), modulus < 1
  CHECK((find_pole(c, zin) != nullptr || find_pole(c, -zin) != nullptr));

  CHECK_THROWS_AS(segment_lift(single_pole(Complex(0.3, 0))), Error);
}

TEST_CASE("pole symmetrization: budget property") {
  Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    RationalFunction Rc = random_rational(rng, Domain::Circle);
    CHECK(reflect_circle(Rc, 1.0).total == Rc.degree());
    RationalFunction Ra = random_rational(rng, Domain::Axis);
    CHECK(reflect_axis(Ra).total == Ra.degree());
    RationalFunction Rs = random_rational(rng, Domain::Semiaxis);
    CHECK(semiaxis_lift(Rs).total == 2 * Rs.degree());
    RationalFunction Rg = random_rational(rng, Domain::Segment);
    CHECK(segment_lift(Rg).total == 2 * Rg.degree());
  }
}

TEST_CASE("squared-modulus identity on the contour") {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    RationalFunction R = random_rational(rng, Domain::Circle);
    const double r = 1.0;
    for (int k = 0; k < 40; ++k) {
      double th = rng.uniform(0.0, 2.0 * kPi);
      Complex zeta = r * Complex(std::cos(th), std::sin(th));
      Complex u = eval(R, zeta);
      Complex v = eval(R, r * r / std::conj(zeta));
      CHECK(std::abs(u * std::conj(v) - std::norm(u)) <= 1e-12 * (1.0 + std::norm(u)));
    }
  }
}

TEST_CASE("spf_to_rational: examples") {
  SimplePartialFraction s1{{Complex(0, 1)}};
  RationalFunction r1 = spf_to_rational(s1);
  CHECK(r1.numerator.size() == 1);
  CHECK(std::abs(r1.numerator[0] - Complex(1, 0)) < 1e-15);
  REQUIRE(r1.poles.size() == 1);

  // {i, -i} -> 2z/(z^2+1)
  SimplePartialFraction s2{{Complex(0, 1), Complex(0, -1)}};
  RationalFunction r2 = spf_to_rational(s2);
  REQUIRE(r2.numerator.size() == 2);
  CHECK(std::abs(r2.numerator[0]) < 1e-15);
  CHECK(std::abs(r2.numerator[1] - Complex(2, 0)) < 1e-15);
  CHECK(r2.poles.size() == 2);

  // repeated pole sums coefficients: {i, i} -> 2/(z - i)
  SimplePartialFraction s3{{Complex(0, 1), Complex(0, 1)}};
  RationalFunction r3 = spf_to_rational(s3);
  REQUIRE(r3.poles.size() == 1);
  CHECK(r3.poles[0].multiplicity == 1);
  CHECK(std::abs(r3.numerator[0] - Complex(2, 0)) < 1e-15);

  // values agree with the direct sum
  Rng rng(17);
  SimplePartialFraction s4;
  for (int i = 0; i < 4; ++i) s4.poles.push_back(rng.box(2.0) + Complex(0, 0.2));
  RationalFunction r4 = spf_to_rational(s4);
  for (int k = 0; k < 20; ++k) {
    Complex z = rng.box(3.0) + Complex(0, 3.5);
    CHECK(std::abs(eval(r4, z) - eval(s4, z)) < 1e-12);
  }
}

TEST_CASE("ComplexPoint: infinity compares only to infinity") {
  ComplexPoint inf = ComplexPoint::infinity();
  CHECK(inf == ComplexPoint::infinity());
  CHECK(!(inf == ComplexPoint(0.0, 0.0)));
  CHECK_THROWS_AS(inf.value(), Error);
}
