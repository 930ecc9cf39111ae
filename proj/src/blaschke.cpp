#include "ratquad/blaschke.hpp"

#include <algorithm>
#include <cmath>

namespace ratquad {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2
constexpr double kPi = 3.14159265358979323846;

void check_on_circle(double az, double r) {
  if (std::abs(az - r) > 1e-9 * r) fail(Errc::OffContour, "point not on the circle contour");
}

}  // namespace

Complex eval_blaschke(const BlaschkeCircle& b, Complex z, int m) {
  const double r = b.radius;
  Complex acc = 1.0;
  for (const auto& p : b.pole_set.entries) {
    Complex den = r * r - z * std::conj(p.location);
    Complex num = r * (z - p.location);
    if (std::abs(den) < kPoleEvalTol * r * r)
      fail(Errc::EvalAtPole, "evaluation at a pole of the Blaschke product");
    acc *= pow_int(num / den, static_cast<long>(m) * p.multiplicity);
  }
  return acc;
}

Complex eval_blaschke(const BlaschkeAxis& b, Complex z, int m) {
  Complex acc = 1.0;
  for (const auto& p : b.pole_set.entries) {
    Complex den = z - std::conj(p.location);
    if (std::abs(den) < kPoleEvalTol * std::max(1.0, std::abs(p.location)))
      fail(Errc::EvalAtPole, "evaluation at a pole of the Blaschke product");
    acc *= pow_int((z - p.location) / den, static_cast<long>(m) * p.multiplicity);
  }
  return acc;
}

double eval_mu(const WeightMu& mu, Complex zeta) {
  if (mu.domain != Domain::Circle && mu.domain != Domain::Segment)
    fail(Errc::OffContour, "complex contour point supplied for an axis-type weight");
  const double r = mu.domain == Domain::Segment ? 1.0 : mu.radius;
  check_on_circle(std::abs(zeta), r);
  double acc = 0.0;
  for (const auto& p : mu.pole_set.entries) {
    double d2 = std::norm(zeta - p.location);
    acc += p.multiplicity * (r * r - std::norm(p.location)) / d2;
  }
  return acc;
}

double eval_mu(const WeightMu& mu, double x) {
  if (mu.domain != Domain::Axis && mu.domain != Domain::Semiaxis)
    fail(Errc::OffContour, "real point supplied for a circle-type weight");
  double acc = 0.0;
  for (const auto& p : mu.pole_set.entries) {
    double d2 = std::norm(Complex(x, 0.0) - std::conj(p.location));
    acc += p.multiplicity * p.location.imag() / d2;
  }
  return acc;
}

double phase_derivative(const BlaschkeCircle& b, int m, double theta) {
  WeightMu mu{b.pole_set, b.pole_set.region == Region::UnitDisc ? Domain::Segment : Domain::Circle,
              b.radius};
  Complex zeta = b.radius * Complex(std::cos(theta), std::sin(theta));
  return 1.0 + m * eval_mu(mu, zeta);
}

double phase_derivative(const BlaschkeAxis& b, int m, double x) {
  WeightMu mu{b.pole_set, Domain::Axis, 1.0};
  return 2.0 * m * eval_mu(mu, x);
}

SupPoint scan_maximum(const std::function<double(double)>& f, double a, double b, int samples,
                      bool cyclic) {
  const int n = std::max(samples, 8);
  const double h = (b - a) / (cyclic ? n : n - 1);
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = a + i * h;
    fs[i] = f(xs[i]);
  }
  SupPoint best{fs[0], xs[0]};
  for (int i = 1; i < n; ++i)
    if (fs[i] > best.value) best = {fs[i], xs[i]};

  auto refine = [&](double lo, double hi) {
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-12) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = f(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = f(x1);
      }
    }
    double xm = 0.5 * (lo + hi);
    double fm = f(xm);
    if (fm > best.value) best = {fm, xm};
  };

  for (int i = 0; i < n; ++i) {
    const bool interior = i > 0 && i < n - 1;
    if (cyclic) {
      double fl = fs[(i + n - 1) % n], fr = fs[(i + 1) % n];
      if (fs[i] >= fl && fs[i] >= fr) refine(xs[i] - h, xs[i] + h);
    } else if (interior) {
      if (fs[i] >= fs[i - 1] && fs[i] >= fs[i + 1]) refine(xs[i - 1], xs[i + 1]);
    } else {
      // endpoint candidate: refine one-sided bracket
      if (i == 0 && fs[0] >= fs[1]) refine(xs[0], xs[1]);
      if (i == n - 1 && fs[n - 1] >= fs[n - 2]) refine(xs[n - 2], xs[n - 1]);
    }
  }
  return best;
}

SupPoint mu_argmax(const WeightMu& mu) {
  if (mu.pole_set.entries.empty()) fail(Errc::PoleSetEmpty, "mu_sup of an empty pole set");
  const int samples = std::max(512, 64 * mu.pole_set.total);
  if (mu.domain == Domain::Circle || mu.domain == Domain::Segment) {
    const double r = mu.domain == Domain::Segment ? 1.0 : mu.radius;
    auto f = [&](double theta) {
      return eval_mu(mu, r * Complex(std::cos(theta), std::sin(theta)));
    };
    return scan_maximum(f, 0.0, 2.0 * kPi, samples, true);
  }
  // tangent compactification; mu_* vanishes at t = +-pi/2
  auto f = [&](double t) { return eval_mu(mu, std::tan(t)); };
  SupPoint s = scan_maximum(f, -0.5 * kPi + 1e-9, 0.5 * kPi - 1e-9, samples, false);
  return {s.value, std::tan(s.position)};
}

double mu_sup(const WeightMu& mu) { return mu_argmax(mu).value; }

}  // namespace ratquad
