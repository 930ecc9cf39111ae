#include "ratquad/randgen.hpp"

#include <algorithm>
#include <cmath>

namespace ratquad {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool far_from_others(const std::vector<Pole>& poles, Complex z, double min_sep) {
  for (const auto& p : poles)
    if (std::abs(p.location - z) < min_sep) return false;
  return true;
}

Complex sample_location(Rng& rng, Domain d, double min_dist) {
  for (int tries = 0; tries < 200; ++tries) {
    Complex z;
    switch (d) {
      case Domain::Circle: {
        // either side of the unit circle, away from it
        if (rng.coin()) {
          const double rad = rng.uniform(0.05, 1.0 - min_dist - 0.01);
          const double ang = rng.uniform(0.0, 2.0 * kPi);
          z = rad * Complex(std::cos(ang), std::sin(ang));
        } else {
          const double rad = rng.uniform(1.0 + min_dist + 0.01, 3.5);
          const double ang = rng.uniform(0.0, 2.0 * kPi);
          z = rad * Complex(std::cos(ang), std::sin(ang));
        }
        if (std::abs(std::abs(z) - 1.0) < min_dist) continue;
        return z;
      }
      case Domain::Axis: {
        const double sign = rng.coin() ? 1.0 : -1.0;
        z = {rng.uniform(-3.0, 3.0), sign * rng.uniform(min_dist + 0.01, 2.5)};
        return z;
      }
      case Domain::Semiaxis: {
        const double rad = rng.uniform(0.1, 3.5);
        const double ang = rng.uniform(0.1, 2.0 * kPi - 0.1);
        z = rad * Complex(std::cos(ang), std::sin(ang));
        const double dist = z.real() >= 0.0 ? std::abs(z.imag()) : std::abs(z);
        if (dist < min_dist + 0.01) continue;
        return z;
      }
      case Domain::Segment: {
        z = rng.box(2.5);
        if (segment_distance(z) < min_dist + 0.01) continue;
        if (std::abs(z) < 0.05) continue;
        return z;
      }
    }
  }
  fail(Errc::ConvergenceFailure, "could not sample a pole location");
}

}  // namespace

RationalFunction random_rational(Rng& rng, Domain d, const RandomSpec& spec) {
  const bool force_proper =
      spec.require_proper || d == Domain::Axis || d == Domain::Semiaxis;
  const int nu = rng.uniform_int(1, 3);
  std::vector<Pole> poles;
  int total = 0;
  for (int i = 0; i < nu; ++i) {
    const int remaining = spec.max_degree - total - (nu - 1 - i);
    if (remaining < 1) break;
    const int mult = rng.uniform_int(1, std::min(spec.max_mult, remaining));
    Complex z;
    do {
      z = sample_location(rng, d, spec.min_contour_dist);
    } while (!far_from_others(poles, z, 0.02));
    poles.push_back({z, mult});
    total += mult;
  }
  int num_deg;
  if (force_proper) {
    num_deg = rng.uniform_int(0, std::max(0, total - spec.min_gap));
  } else {
    num_deg = rng.uniform_int(0, std::min(spec.max_degree, total + 2));
  }
  std::vector<Complex> num(num_deg + 1);
  for (auto& c : num) c = rng.box(1.0);
  if (std::abs(num.back()) < 0.2) num.back() += Complex(0.5, 0.5);
  if (std::abs(num[0]) < 1e-3) num[0] += Complex(0.3, -0.2);
  return make_rational(std::move(num), std::move(poles));
}

SimplePartialFraction random_spf_one_sided(Rng& rng, int max_n, bool upper) {
  const int n = rng.uniform_int(1, max_n);
  SimplePartialFraction s;
  for (int i = 0; i < n; ++i) {
    double im = rng.uniform(0.08, 2.5);
    s.poles.push_back({rng.uniform(-3.0, 3.0), upper ? im : -im});
  }
  return s;
}

SimplePartialFraction random_spf_two_sided(Rng& rng, int max_n) {
  const int n = rng.uniform_int(2, std::max(2, max_n));
  SimplePartialFraction s;
  for (int i = 0; i < n; ++i) {
    double im = rng.uniform(0.08, 2.5) * (rng.coin() ? 1.0 : -1.0);
    s.poles.push_back({rng.uniform(-3.0, 3.0), im});
  }
  return s;
}

SimplePartialFraction random_spf_beam(Rng& rng, int max_n, double alpha) {
  const int n = rng.uniform_int(1, max_n);
  SimplePartialFraction s;
  for (int i = 0; i < n; ++i) {
    const double rad = rng.uniform(0.3, 3.0);
    const double ang = kPi + rng.uniform(-0.95, 0.95) * alpha;
    s.poles.push_back(rad * Complex(std::cos(ang), std::sin(ang)));
  }
  return s;
}

}  // namespace ratquad
