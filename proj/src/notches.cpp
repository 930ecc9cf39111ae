#include "ratquad/notches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ratquad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double normalize_phi(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p -= kTwoPi;
  return p;
}

// Monotone unwrapped-phase problem on [a,b]: w has unit modulus, the phase
// derivative is strictly positive, and deriv_bound majorizes it on [p, p+h].
// The marching grid is chosen so no single step can advance the phase by pi,
// which makes principal-value increments exact.
struct PhaseProblem {
  std::function<Complex(double)> w;
  std::function<double(double)> deriv;
  std::function<double(double, double)> deriv_bound;
  double a = 0.0, b = 0.0;
  double winding = 0.0;  // expected phase(b) - phase(a)
};

struct PhaseTable {
  std::vector<double> param;
  std::vector<double> phase;
  std::vector<Complex> wval;
};

PhaseTable march_phase(const PhaseProblem& pr) {
  PhaseTable t;
  const double span = pr.b - pr.a;
  double p = pr.a;
  Complex w0 = pr.w(p);
  double phase = std::arg(w0);
  t.param.push_back(p);
  t.phase.push_back(phase);
  t.wval.push_back(w0);
  const double cap = span / 64.0;
  while (p < pr.b) {
    double h = std::min({pr.b - p, cap, 1.4 / pr.deriv(p)});
    int halvings = 0;
    while (h * pr.deriv_bound(p, h) > 2.5) {
      h *= 0.5;
      if (++halvings > 200 || h < span * 1e-15)
        fail(Errc::ConvergenceFailure, "phase march step underflow");
    }
    const double pn = std::min(p + h, pr.b);
    Complex w1 = pr.w(pn);
    phase += std::arg(w1 * std::conj(w0));
    p = pn;
    w0 = w1;
    t.param.push_back(p);
    t.phase.push_back(phase);
    t.wval.push_back(w0);
    if (t.param.size() > 4000000)
      fail(Errc::ConvergenceFailure, "phase march grid exploded");
  }
  const double measured = t.phase.back() - t.phase.front();
  if (std::abs(measured - pr.winding) > 1e-6)
    fail(Errc::ConvergenceFailure, "phase winding does not match the pole-set budget");
  t.phase.back() = t.phase.front() + pr.winding;  // snap the exact integer winding
  return t;
}

double solve_phase(const PhaseProblem& pr, const PhaseTable& t, double target) {
  const auto it = std::lower_bound(t.phase.begin(), t.phase.end(), target);
  if (it == t.phase.begin()) return t.param.front();
  if (it == t.phase.end()) fail(Errc::ConvergenceFailure, "phase target out of range");
  const size_t i = static_cast<size_t>(it - t.phase.begin());
  double lo = t.param[i - 1], hi = t.param[i];
  const double pa = t.phase[i - 1];
  const Complex wa = t.wval[i - 1];
  const double tol = std::max(1e-13, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(target));

  double span = t.phase[i] - pa;
  double x = (span > 0.0) ? lo + (target - pa) / span * (hi - lo) : 0.5 * (lo + hi);
  x = std::clamp(x, lo, hi);
  double best_x = x, best_g = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 60; ++iter) {
    const double g = pa + std::arg(pr.w(x) * std::conj(wa)) - target;
    if (std::abs(g) < std::abs(best_g)) {
      best_g = g;
      best_x = x;
    }
    if (std::abs(g) <= tol) return x;
    if (g > 0.0)
      hi = x;
    else
      lo = x;
    double xn = x - g / pr.deriv(x);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) break;
    x = xn;
  }
  return best_x;
}

void require_nonempty(const PoleSet& ps) {
  if (ps.entries.empty() || ps.total <= 0)
    fail(Errc::PoleSetEmpty, "empty pole set: the function has no Blaschke structure");
}

PhaseProblem circle_problem(const PoleSet& ps, double r, int m) {
  PhaseProblem pr;
  pr.a = 0.0;
  pr.b = kTwoPi;
  pr.winding = kTwoPi * (static_cast<double>(m) * ps.total + 1.0);
  pr.w = [&ps, r, m](double theta) {
    const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
    Complex acc = Complex(std::cos(theta), std::sin(theta));  // zeta/r
    for (const auto& p : ps.entries) {
      const Complex v = r * (zeta - p.location) / (r * r - zeta * std::conj(p.location));
      acc *= pow_int(v, static_cast<long>(m) * p.multiplicity);
    }
    return acc;
  };
  pr.deriv = [&ps, r, m](double theta) {
    const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
    double mu = 0.0;
    for (const auto& p : ps.entries)
      mu += p.multiplicity * (r * r - std::norm(p.location)) / std::norm(zeta - p.location);
    return 1.0 + m * mu;
  };
  pr.deriv_bound = [&ps, r, m](double theta, double h) {
    const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
    double mu = 0.0;
    for (const auto& p : ps.entries) {
      const double d = std::abs(zeta - p.location) - r * h;  // arc-length bound
      if (d <= 0.0) return std::numeric_limits<double>::infinity();
      mu += p.multiplicity * (r * r - std::norm(p.location)) / (d * d);
    }
    return 1.0 + m * mu;
  };
  return pr;
}

PhaseProblem axis_problem(const PoleSet& ps, int m) {
  // x = tan t on [-pi/2, pi/2]; each factor (x - z)/(x - conj z) becomes
  // (sin t - z cos t)/(sin t - conj(z) cos t), finite at both endpoints.
  PhaseProblem pr;
  pr.a = -0.5 * kPi;
  pr.b = 0.5 * kPi;
  pr.winding = kTwoPi * static_cast<double>(m) * ps.total;
  pr.w = [&ps, m](double t) {
    const double s = std::sin(t), c = std::cos(t);
    Complex acc = 1.0;
    for (const auto& p : ps.entries) {
      const Complex num = s - p.location * c;
      const Complex den = s - std::conj(p.location) * c;
      acc *= pow_int(num / den, static_cast<long>(m) * p.multiplicity);
    }
    return acc;
  };
  pr.deriv = [&ps, m](double t) {
    const double s = std::sin(t), c = std::cos(t);
    double d = 0.0;
    for (const auto& p : ps.entries)
      d += p.multiplicity * p.location.imag() / std::norm(s - std::conj(p.location) * c);
    return 2.0 * m * d;
  };
  pr.deriv_bound = [&ps, m](double t, double h) {
    const double s = std::sin(t), c = std::cos(t);
    double d = 0.0;
    for (const auto& p : ps.entries) {
      const double e = std::abs(Complex(s, 0.0) - std::conj(p.location) * c) -
                       h * (1.0 + std::abs(p.location));
      if (e <= 0.0) return std::numeric_limits<double>::infinity();
      d += p.multiplicity * p.location.imag() / (e * e);
    }
    return 2.0 * m * d;
  };
  return pr;
}

}  // namespace

NotchSet notches_circle(const PoleSet& ps, double r, int m, double phi) {
  require_nonempty(ps);
  if (m < 1) fail(Errc::BadParams, "m must be a positive integer");
  if (!(r > 0.0)) fail(Errc::BadParams, "radius must be positive");
  for (const auto& p : ps.entries)
    if (std::abs(p.location) >= r)
      fail(Errc::BadParams, "pole set is not strictly inside the disc");

  const double phat = normalize_phi(phi);
  const int n_nodes = m * ps.total + 1;
  PhaseProblem pr = circle_problem(ps, r, m);
  PhaseTable table = march_phase(pr);

  const double theta0 = table.phase.front();
  const long j0 = static_cast<long>(std::ceil((theta0 - phat) / kTwoPi));

  NotchSet out;
  out.domain = ps.region == Region::UnitDisc ? Domain::Segment : Domain::Circle;
  out.radius = r;
  out.m = m;
  out.phi = phat;
  const Complex rhs = Complex(std::cos(phat), std::sin(phat));
  WeightMu mu{ps, out.domain, r};
  for (int i = 0; i < n_nodes; ++i) {
    const double target = phat + kTwoPi * static_cast<double>(j0 + i);
    double theta = solve_phase(pr, table, target);
    if (theta >= kTwoPi) theta -= kTwoPi;
    const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
    out.params.push_back(theta);
    out.nodes.push_back(ComplexPoint(zeta));
    out.mu.push_back(eval_mu(mu, zeta));
    out.residuals.push_back(r * std::abs(pr.w(theta) - rhs));
  }
  // ascending theta in [0, 2pi): only the first node can have wrapped
  if (out.params.size() > 1 && out.params.front() > out.params.back()) {
    std::rotate(out.params.begin(), out.params.begin() + 1, out.params.end());
    std::rotate(out.nodes.begin(), out.nodes.begin() + 1, out.nodes.end());
    std::rotate(out.mu.begin(), out.mu.begin() + 1, out.mu.end());
    std::rotate(out.residuals.begin(), out.residuals.begin() + 1, out.residuals.end());
  }
  return out;
}

NotchSet notches_axis(const PoleSet& ps, int m, double phi) {
  require_nonempty(ps);
  if (m < 1) fail(Errc::BadParams, "m must be a positive integer");
  for (const auto& p : ps.entries)
    if (!(p.location.imag() > 0.0))
      fail(Errc::BadParams, "pole set is not in the open upper half-plane");

  const double phat = normalize_phi(phi);
  const int n_nodes = m * ps.total;
  const bool at_inf = phat < 1e-12 || kTwoPi - phat < 1e-12;

  PhaseProblem pr = axis_problem(ps, m);
  PhaseTable table = march_phase(pr);

  NotchSet out;
  out.domain = Domain::Axis;
  out.m = m;
  out.phi = phat;
  out.infinite_node = at_inf;
  const Complex rhs = at_inf ? Complex(1.0, 0.0) : Complex(std::cos(phat), std::sin(phat));
  WeightMu mu{ps, Domain::Axis, 1.0};

  const int n_finite = at_inf ? n_nodes - 1 : n_nodes;
  for (int i = 0; i < n_finite; ++i) {
    const double target = at_inf ? kTwoPi * static_cast<double>(i + 1)
                                 : phat + kTwoPi * static_cast<double>(i);
    const double t = solve_phase(pr, table, target);
    const double x = std::tan(t);
    out.params.push_back(x);
    out.nodes.push_back(ComplexPoint(x, 0.0));
    out.mu.push_back(eval_mu(mu, x));
    out.residuals.push_back(std::abs(pr.w(t) - rhs));
  }
  if (at_inf) {
    out.params.push_back(std::numeric_limits<double>::infinity());
    out.nodes.push_back(ComplexPoint::infinity());
    out.residuals.push_back(std::abs(Complex(1.0, 0.0) - rhs));
  }
  return out;
}

NotchSet notches_semiaxis(const PoleSet& ps, int m, double phi) {
  // the lifted pole multiset must be symmetric under z -> -conj(z)
  for (const auto& p : ps.entries) {
    const Complex mirror = -std::conj(p.location);
    bool found = false;
    for (const auto& q : ps.entries)
      if (std::abs(q.location - mirror) < kMergeTol * std::max(1.0, std::abs(mirror)) &&
          q.multiplicity == p.multiplicity) {
        found = true;
        break;
      }
    if (!found)
      fail(Errc::BadParams, "pole set lacks the semiaxis lift symmetry {z, -conj z}");
  }
  NotchSet out = notches_axis(ps, m, phi);
  out.domain = Domain::Semiaxis;
  return out;
}

NotchSet notches_segment(const PoleSet& ps, int m, double phi) {
  for (const auto& p : ps.entries)
    if (std::abs(p.location) >= 1.0)
      fail(Errc::BadParams, "pole set is not strictly inside the unit disc");
  NotchSet out = notches_circle(ps, 1.0, m, phi);
  out.domain = Domain::Segment;
  out.x_proj.reserve(out.nodes.size());
  for (const auto& nd : out.nodes) out.x_proj.push_back(nd.re);
  return out;
}

double prescribe_phi_circle(const PoleSet& ps, double r, int m, double theta) {
  require_nonempty(ps);
  BlaschkeCircle b{ps, r};
  const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
  const Complex w = Complex(std::cos(theta), std::sin(theta)) * eval_blaschke(b, zeta, m);
  return normalize_phi(std::arg(w));
}

double prescribe_phi_axis(const PoleSet& ps, int m, double x) {
  require_nonempty(ps);
  BlaschkeAxis b{ps};
  return normalize_phi(std::arg(eval_blaschke(b, Complex(x, 0.0), m)));
}

}  // namespace ratquad
