#include "ratquad/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ratquad/oracle.hpp"

namespace ratquad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
// generic parameter for the exact quadrature identities; any value works,
// this one keeps clear of the infinite-notch case phi = 0 (mod 2pi)
constexpr double kPhiEval = 0.9;

double qp_exponent(double p, double q) {
  if (!(p > 0.0)) fail(Errc::BadParams, "p must be positive");
  const double invq = std::isinf(q) ? 0.0 : 1.0 / q;
  if (!(1.0 / p > invq)) fail(Errc::BadParams, "need p < q");
  return 1.0 / p - invq;
}

double pow_2m(double a, int m) {
  double p = a * a;
  double acc = 1.0;
  long e = m;
  while (e > 0) {
    if (e & 1) acc *= p;
    p *= p;
    e >>= 1;
  }
  return acc;
}

int scan_samples(const QuadTarget& t) { return std::max(512, 64 * (t.degree() + 2)); }

}  // namespace

BoundReport make_report(double lhs, double rhs) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs != 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
  r.holds = lhs <= rhs * (1.0 + 1e-10);
  r.sharp_gap = rhs - lhs;
  return r;
}

int m_p(double p) {
  if (!(p > 0.0)) fail(Errc::BadParams, "m_p needs p > 0");
  int m = static_cast<int>(std::ceil(0.5 * p));
  return std::max(m, 1);
}

double beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(Errc::BadParams, "beta function needs positive arguments");
  if (a + b < 170.0) return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double rho_pole_height(double p) {
  if (!(p > 1.0)) fail(Errc::BadParams, "rho(p;.) needs p > 1");
  const double num = kPi * std::pow(2.0, 2.0 - p);
  const double den = (p - 1.0) * beta_function(0.5 * p, 0.5 * p);
  return std::pow(num / den, 1.0 / (p - 1.0));
}

double hilbert_norm(double p) {
  if (!(p > 1.0) || std::isinf(p)) fail(Errc::BadParams, "h_p defined for 1 < p < inf");
  const double t = std::tan(kPi / (2.0 * p));
  return p <= 2.0 ? t : 1.0 / t;
}

double lp_norm_p(Domain d, const QuadTarget& t, double p, double r) {
  if (!(p > 0.0)) fail(Errc::BadParams, "L^p norm needs p > 0");
  const int m = static_cast<int>(std::lround(0.5 * p));
  if (m >= 1 && std::abs(p - 2.0 * m) < 1e-12) {
    switch (d) {
      case Domain::Circle: return norm_circle_2m(t, r, m, kPhiEval).real();
      case Domain::Axis: return norm_axis_2m(t, m, kPhiEval).real();
      case Domain::Semiaxis:
        return norm_semiaxis_2m(t, m, kPhiEval, SemiaxisWeight::InvSqrt).real();
      case Domain::Segment: return norm_segment_2m(t, m, kPhiEval).real();
    }
  }
  auto density = [&](double x) { return std::pow(std::abs(t.f(Complex(x, 0.0))), p); };
  oracle::IntegralEstimate est;
  switch (d) {
    case Domain::Circle:
      est = oracle::circle(
          [&](double theta) {
            return std::pow(std::abs(t.f(r * Complex(std::cos(theta), std::sin(theta)))), p);
          },
          r);
      break;
    case Domain::Axis: est = oracle::axis(density); break;
    case Domain::Semiaxis: est = oracle::semiaxis(density, oracle::Weight::InvSqrt); break;
    case Domain::Segment: est = oracle::segment(density); break;
  }
  if (!est.converged) fail(Errc::ConvergenceFailure, "oracle failed to converge for an L^p norm");
  return est.value;
}

double sup_circle(const QuadTarget& t, double r) {
  auto f = [&](double theta) {
    return std::abs(t.f(r * Complex(std::cos(theta), std::sin(theta))));
  };
  return scan_maximum(f, 0.0, kTwoPi, scan_samples(t), true).value;
}

double sup_axis(const QuadTarget& t) {
  auto f = [&](double u) { return std::abs(t.f(Complex(std::tan(u), 0.0))); };
  return scan_maximum(f, -0.5 * kPi + 1e-9, 0.5 * kPi - 1e-9, scan_samples(t), false).value;
}

double sup_semiaxis(const QuadTarget& t) {
  auto f = [&](double u) {
    const double v = std::tan(u);
    return std::abs(t.f(Complex(v * v, 0.0)));
  };
  return scan_maximum(f, 0.0, 0.5 * kPi - 1e-9, scan_samples(t), false).value;
}

double sup_segment(const QuadTarget& t) {
  auto f = [&](double u) { return std::abs(t.f(Complex(std::cos(u), 0.0))); };
  return scan_maximum(f, 0.0, kPi, scan_samples(t), false).value;
}

BoundReport pointwise_circle(const QuadTarget& t, double r, int m, double theta) {
  PoleSet ps = reflect_circle(t.poles, t.num_degree, r);
  WeightMu mu{ps, Domain::Circle, r};
  const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
  const double lhs = pow_2m(std::abs(t.f(zeta)), m) / (m * eval_mu(mu, zeta) + 1.0);
  const double rhs = norm_circle_2m(t, r, m, kPhiEval).real() / (kTwoPi * r);
  return make_report(lhs, rhs);
}

BoundReport pointwise_axis(const QuadTarget& t, int m, double x) {
  PoleSet ps = reflect_axis(t.poles, t.num_degree);
  WeightMu mu{ps, Domain::Axis, 1.0};
  const double lhs = pow_2m(std::abs(t.f(Complex(x, 0.0))), m) / eval_mu(mu, x);
  const double rhs = m / kPi * norm_axis_2m(t, m, kPhiEval).real();
  return make_report(lhs, rhs);
}

BoundReport pointwise_semiaxis(const QuadTarget& t, int m, double x) {
  PoleSet ps = semiaxis_lift(t.poles, t.num_degree);
  WeightMu mu{ps, Domain::Semiaxis, 1.0};
  const double lhs = pow_2m(std::abs(t.f(Complex(x * x, 0.0))), m) / eval_mu(mu, x);
  const double rhs =
      m / kPi * norm_semiaxis_2m(t, m, kPhiEval, SemiaxisWeight::InvSqrt).real();
  return make_report(lhs, rhs);
}

BoundReport pointwise_segment(const QuadTarget& t, int m, double theta) {
  PoleSet ps = segment_lift(t.poles, t.num_degree);
  WeightMu mu{ps, Domain::Segment, 1.0};
  const Complex zeta(std::cos(theta), std::sin(theta));
  const double lhs = pow_2m(std::abs(t.f(Complex(zeta.real(), 0.0))), m) /
                     (m * eval_mu(mu, zeta) + 1.0);
  const double rhs = norm_segment_2m(t, m, kPhiEval).real() / kPi;
  return make_report(lhs, rhs);
}

double nikolskii_constant_mu(Domain d, double mu_sup_value, double p, double q, double r) {
  const double e = qp_exponent(p, q);
  const int mp = m_p(p);
  switch (d) {
    case Domain::Circle: return std::pow((mp * mu_sup_value + 1.0) / (kTwoPi * r), e);
    case Domain::Axis:
    case Domain::Semiaxis: return std::pow(mp / kPi * mu_sup_value, e);
    case Domain::Segment: return std::pow((mp * mu_sup_value + 1.0) / kPi, e);
  }
  fail(Errc::BadParams, "unknown domain");
}

double nikolskii_constant_geometric(Domain d, double p, double q, int n, double delta, double r) {
  const double e = qp_exponent(p, q);
  const int mp = m_p(p);
  if (n < 1) fail(Errc::BadParams, "degree must be positive");
  switch (d) {
    case Domain::Circle:
      if (!(delta > 0.0 && delta < 1.0)) fail(Errc::BadGeometry, "annulus needs delta in (0,1)");
      return std::pow((mp * n * (1.0 + delta) / (1.0 - delta) + 1.0) / (kTwoPi * r), e);
    case Domain::Axis:
      if (!(delta > 0.0)) fail(Errc::BadGeometry, "stripe needs delta > 0");
      return std::pow(mp * n / (kPi * delta), e);
    case Domain::Semiaxis:
      if (!(delta > 0.0)) fail(Errc::BadGeometry, "parabola needs delta > 0");
      return std::pow(2.0 * mp * n / (kPi * delta), e);
    case Domain::Segment:
      if (!(delta > 1.0)) fail(Errc::BadGeometry, "ellipse needs delta > 1");
      return std::pow((2.0 * mp * n * (delta + 1.0) / (delta - 1.0) + 1.0) / kPi, e);
  }
  fail(Errc::BadParams, "unknown domain");
}

double baranov_constant(double p, double q, int n, double delta, double r) {
  if (!(delta > 0.0 && delta < 1.0)) fail(Errc::BadGeometry, "annulus needs delta in (0,1)");
  const double e = qp_exponent(p, q);
  const int mp = m_p(p);
  return std::pow(1.0 / (kTwoPi * r), e) * std::pow(mp * n + 1.0, e) *
         std::pow((1.0 + delta) / (1.0 - delta), e);
}

double polynomial_constant_segment(double p, double q, int n) {
  const double e = qp_exponent(p, q);
  return std::pow((2.0 * m_p(p) * n + 1.0) / kPi, e);
}

double laurent_constant_circle(double p, double q, int n1, int n2, double r) {
  const double e = qp_exponent(p, q);
  return std::pow((m_p(p) * (n1 + n2) + 1.0) / (kTwoPi * r), e);
}

double trig_constant(double p, double q, int n) {
  const double e = qp_exponent(p, q);
  const int mp = m_p(p);
  return std::pow((2.0 * mp * n + mp + 1.0) / kTwoPi, e);
}

AlternativeReport alternative_circle(const QuadTarget& t, double r, int m, double d,
                                     double theta) {
  PoleSet ps = reflect_circle(t.poles, t.num_degree, r);
  WeightMu mu{ps, Domain::Circle, r};
  const Complex zeta = r * Complex(std::cos(theta), std::sin(theta));
  const double a = std::abs(t.f(zeta));
  AlternativeReport rep;
  rep.lhs1 = std::pow(a, d);
  rep.rhs1 = (m * eval_mu(mu, zeta) + 1.0) / (kTwoPi * r);
  rep.first = rep.lhs1 < rep.rhs1;
  rep.lhs2 = std::pow(a, 2.0 * m - d);
  rep.rhs2 = norm_circle_2m(t, r, m, kPhiEval).real();
  rep.second = rep.lhs2 <= rep.rhs2 * (1.0 + 1e-10);
  return rep;
}

AlternativeReport alternative_axis(const QuadTarget& t, int m, double d, double x) {
  PoleSet ps = reflect_axis(t.poles, t.num_degree);
  WeightMu mu{ps, Domain::Axis, 1.0};
  const double a = std::abs(t.f(Complex(x, 0.0)));
  AlternativeReport rep;
  rep.lhs1 = std::pow(a, d);
  rep.rhs1 = eval_mu(mu, x);
  rep.first = rep.lhs1 < rep.rhs1;
  rep.lhs2 = std::pow(a, 2.0 * m - d);
  rep.rhs2 = m / kPi * norm_axis_2m(t, m, kPhiEval).real();
  rep.second = rep.lhs2 <= rep.rhs2 * (1.0 + 1e-10);
  return rep;
}

namespace {

enum class Side { Upper, Lower, Mixed, OnAxis };

Side spf_side(const SimplePartialFraction& rho) {
  bool up = false, down = false;
  for (const auto& z : rho.poles) {
    if (std::abs(z.imag()) < kContourTol * std::max(1.0, std::abs(z))) return Side::OnAxis;
    (z.imag() > 0.0 ? up : down) = true;
  }
  return up && down ? Side::Mixed : (up ? Side::Upper : Side::Lower);
}

}  // namespace

SpfBounds spf_bounds(const SimplePartialFraction& rho, double p) {
  if (!(p > 1.0)) fail(Errc::BadParams, "d(rho;p) needs p > 1");
  if (rho.poles.empty()) fail(Errc::BadParams, "empty SPF");
  const Side side = spf_side(rho);
  if (side == Side::Mixed || side == Side::OnAxis)
    fail(Errc::PolesOnBothSides, "SPF poles must lie strictly on one side of the real axis");
  const QuadTarget t = make_target(spf_to_rational(rho));
  SpfBounds out;
  out.sup = sup_axis(t);
  out.norm_p_p = lp_norm_p(Domain::Axis, t, p);
  out.d = kTwoPi * std::pow(out.sup, p - 1.0) / out.norm_p_p;
  out.upper = make_report(out.d, 2.0 * m_p(p));
  const int n = rho.degree();
  const double low = p <= 2.0 ? std::cos(kPi * (1.0 - 0.5 * p)) / n : 1.0 / n;
  out.lower = make_report(low, out.d);
  return out;
}

double spf_capital_d(const SimplePartialFraction& rho, double p) {
  const SpfBounds b = spf_bounds(rho, p);
  return std::pow(b.d / kTwoPi, 1.0 / (p - 1.0));
}

BoundReport spf_mixed_bound(const SimplePartialFraction& rho, double p, double q) {
  if (!(p > 1.0)) fail(Errc::BadParams, "mixed SPF bound needs p > 1");
  if (!std::isinf(q) && !(q > p)) fail(Errc::BadParams, "mixed SPF bound needs q > p");
  if (spf_side(rho) == Side::OnAxis)
    fail(Errc::PoleOnContour, "SPF pole on the real axis");
  const QuadTarget t = make_target(spf_to_rational(rho));
  const double pp = p / (p - 1.0);
  const double qp = std::isinf(q) ? 1.0 : q / (q - 1.0);
  const double norm_q = std::isinf(q) ? sup_axis(t)
                                      : std::pow(lp_norm_p(Domain::Axis, t, q), 1.0 / q);
  const double norm_p = std::pow(lp_norm_p(Domain::Axis, t, p), 1.0 / p);
  const double lhs = std::pow(norm_q, qp);
  const double e = pp * qp * qp_exponent(p, q);
  const double rhs = std::pow(2.0, qp - pp) * std::pow(m_p(p) / kPi, e) *
                     std::pow(1.0 + hilbert_norm(p), pp) * std::pow(norm_p, pp);
  return make_report(lhs, rhs);
}

SpfSemiaxisReport spf_semiaxis_bound(const SimplePartialFraction& rho, double alpha, int m) {
  if (!(alpha > 0.0 && alpha < 0.5 * kPi)) fail(Errc::BadParams, "beam half-angle in (0, pi/2)");
  if (m < 1) fail(Errc::BadParams, "m must be a positive integer");
  if (rho.poles.empty()) fail(Errc::BadParams, "empty SPF");
  for (const auto& z : rho.poles) {
    double a = std::arg(z);  // (-pi, pi]
    if (!(std::abs(a) > kPi - alpha))
      fail(Errc::PolesOutsideBeam, "SPF pole outside the beam around the negative semiaxis");
  }
  const QuadTarget t = make_target(spf_to_rational(rho));
  SpfSemiaxisReport out;
  out.sup = sup_semiaxis(t);
  double S = 0.0;
  for (const auto& z : rho.poles) S += 1.0 / std::abs(z);
  out.S = S;
  out.norm2m = norm_semiaxis_2m(t, m, kPhiEval, SemiaxisWeight::InvSqrt).real();
  const int n = rho.degree();
  const double rhs = 2.0 * std::sqrt(static_cast<double>(n)) /
                     std::pow(std::cos(alpha), 2.0 * m) * (m / kPi) * out.norm2m;
  const double e = 2.0 * m - 0.5;
  out.sup_vs_S = make_report(std::pow(out.sup, e), std::pow(S, e));
  out.S_vs_rhs = make_report(std::pow(S, e), rhs);
  return out;
}

SigmaTriple sigma_comparison(double p, int n) {
  if (!(p > 1.0)) fail(Errc::BadParams, "sigma(p) needs p > 1");
  if (n < 1) fail(Errc::BadParams, "n must be positive");
  SigmaTriple out;
  const double pp = p / (p - 1.0);
  out.sigma = p * std::pow(std::sin(kPi / p), -pp);
  if (p >= 2.0) {
    out.sigma1 = std::pow(1.0 / (kTwoPi * n), 1.0 / (p - 1.0));
    out.sigma2 = std::pow((p + 2.0) / kTwoPi, 1.0 / (p - 1.0));
  } else {
    out.sigma1 = out.sigma2 = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

// ---- witnesses ----------------------------------------------------------------

namespace {

// log-derivative pieces of the circle Blaschke product
Complex circle_log_deriv(const PoleSet& ps, double r, Complex z) {
  Complex acc = 0.0;
  for (const auto& p : ps.entries)
    acc += static_cast<double>(p.multiplicity) *
           (1.0 / (z - p.location) + std::conj(p.location) / (r * r - z * std::conj(p.location)));
  return acc;
}

Complex circle_log_deriv2(const PoleSet& ps, double r, Complex z) {
  Complex acc = 0.0;
  for (const auto& p : ps.entries) {
    const Complex a = z - p.location;
    const Complex b = r * r - z * std::conj(p.location);
    acc += static_cast<double>(p.multiplicity) *
           (-1.0 / (a * a) + std::conj(p.location) * std::conj(p.location) / (b * b));
  }
  return acc;
}

Complex axis_log_deriv(const PoleSet& ps, Complex z) {
  Complex acc = 0.0;
  for (const auto& p : ps.entries)
    acc += static_cast<double>(p.multiplicity) *
           (1.0 / (z - p.location) - 1.0 / (z - std::conj(p.location)));
  return acc;
}

Complex axis_log_deriv2(const PoleSet& ps, Complex z) {
  Complex acc = 0.0;
  for (const auto& p : ps.entries) {
    const Complex a = z - p.location;
    const Complex b = z - std::conj(p.location);
    acc += static_cast<double>(p.multiplicity) * (-1.0 / (a * a) + 1.0 / (b * b));
  }
  return acc;
}

Witness circle_star_witness(WitnessKind kind, const PoleSet& ps, double r,
                            std::optional<double> position) {
  if (ps.entries.empty()) fail(Errc::BadParams, "circle witness needs a nonempty pole set");
  WeightMu mu{ps, Domain::Circle, r};
  const double theta_star = position ? *position : mu_argmax(mu).position;
  const double phi = prescribe_phi_circle(ps, r, 1, theta_star);
  NotchSet ns = notches_circle(ps, r, 1, phi);
  size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < ns.params.size(); ++k) {
    double d = std::abs(std::remainder(ns.params[k] - theta_star, kTwoPi));
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  const Complex zeta1 = ns.nodes[best].value();

  BlaschkeCircle B{ps, r};
  const Complex b1 = eval_blaschke(B, zeta1);
  const Complex rhs = zeta1 * b1;  // equals r e^{i phi} up to the notch residual
  const Complex l1 = circle_log_deriv(ps, r, zeta1);
  const Complex lp1 = circle_log_deriv2(ps, r, zeta1);
  const Complex d1 = b1 * (1.0 + zeta1 * l1);                       // (z B)' at zeta1
  const Complex d2 = b1 * (2.0 * l1 + zeta1 * (l1 * l1 + lp1));     // (z B)'' at zeta1

  Witness w;
  w.kind = kind;
  w.domain = Domain::Circle;
  w.radius = r;
  w.phi = phi;
  w.node = zeta1;
  w.target.num_degree = ps.total;
  for (const auto& p : ps.entries)
    w.target.poles.push_back({r * r / std::conj(p.location), p.multiplicity});
  w.target.f = [B, zeta1, rhs, d1, d2](Complex z) {
    if (std::abs(z - zeta1) < 1e-6) return d1 + 0.5 * d2 * (z - zeta1);
    return (z * eval_blaschke(B, z) - rhs) / (z - zeta1);
  };
  return w;
}

Witness axis_star_witness(const PoleSet& ps, std::optional<double> position) {
  if (ps.entries.empty()) fail(Errc::BadParams, "axis witness needs a nonempty pole set");
  WeightMu mu{ps, Domain::Axis, 1.0};
  const double x_star = position ? *position : mu_argmax(mu).position;
  const double phi = prescribe_phi_axis(ps, 1, x_star);
  NotchSet ns = notches_axis(ps, 1, phi);
  size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int k = 0; k < ns.finite_count(); ++k) {
    double d = std::abs(ns.params[k] - x_star);
    if (d < best_d) {
      best_d = d;
      best = static_cast<size_t>(k);
    }
  }
  const Complex x1 = ns.nodes[best].value();

  BlaschkeAxis B{ps};
  const Complex b1 = eval_blaschke(B, x1);
  const Complex l1 = axis_log_deriv(ps, x1);
  const Complex lp1 = axis_log_deriv2(ps, x1);
  const Complex d1 = b1 * l1;
  const Complex d2 = b1 * (l1 * l1 + lp1);

  Witness w;
  w.kind = WitnessKind::AxisStar;
  w.domain = Domain::Axis;
  w.phi = phi;
  w.node = x1;
  w.target.num_degree = ps.total - 1;
  w.target.leading = 1.0 - Complex(std::cos(phi), std::sin(phi));
  for (const auto& p : ps.entries)
    w.target.poles.push_back({std::conj(p.location), p.multiplicity});
  w.target.f = [B, x1, b1, d1, d2](Complex z) {
    if (std::abs(z - x1) < 1e-6) return d1 + 0.5 * d2 * (z - x1);
    return (eval_blaschke(B, z) - b1) / (z - x1);
  };
  return w;
}

RationalFunction jacobi_extremal_polynomial(int n) {
  // 1 + 2 sum_{k=1..n} T_k(x) == sin((2n+1)t/2)/sin(t/2) at x = cos t
  std::vector<double> total(n + 1, 0.0);
  total[0] = 1.0;
  std::vector<double> t_prev{1.0}, t_cur{0.0, 1.0};
  for (int k = 1; k <= n; ++k) {
    for (size_t j = 0; j < t_cur.size(); ++j) total[j] += 2.0 * t_cur[j];
    if (k == n) break;
    std::vector<double> t_next(k + 2, 0.0);
    for (size_t j = 0; j < t_cur.size(); ++j) t_next[j + 1] += 2.0 * t_cur[j];
    for (size_t j = 0; j < t_prev.size(); ++j) t_next[j] -= t_prev[j];
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  std::vector<Complex> coeffs(total.begin(), total.end());
  return make_rational(std::move(coeffs), {});
}

}  // namespace

WitnessKind witness_kind_from_name(const std::string& name) {
  if (name == "circle_star") return WitnessKind::CircleStar;
  if (name == "circle_delta_star") return WitnessKind::CircleDeltaStar;
  if (name == "axis_star") return WitnessKind::AxisStar;
  if (name == "rho_p") return WitnessKind::RhoP;
  if (name == "segment_jacobi") return WitnessKind::SegmentJacobi;
  if (name == "trig_star") return WitnessKind::TrigStar;
  fail(Errc::BadKind, "unknown witness kind: " + name);
}

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::CircleStar: return "circle_star";
    case WitnessKind::CircleDeltaStar: return "circle_delta_star";
    case WitnessKind::AxisStar: return "axis_star";
    case WitnessKind::RhoP: return "rho_p";
    case WitnessKind::SegmentJacobi: return "segment_jacobi";
    case WitnessKind::TrigStar: return "trig_star";
  }
  fail(Errc::BadKind, "unknown witness kind");
}

Witness extremal_witness(WitnessKind kind, const WitnessParams& params) {
  switch (kind) {
    case WitnessKind::CircleStar: {
      if (!params.pole_set) fail(Errc::BadParams, "circle_star needs a pole set");
      return circle_star_witness(kind, *params.pole_set, params.r, params.position);
    }
    case WitnessKind::CircleDeltaStar: {
      if (params.n < 1 || !(params.delta > 0.0 && params.delta < 1.0))
        fail(Errc::BadParams, "circle_delta_star needs n >= 1 and delta in (0,1)");
      PoleSet ps;
      ps.entries = {{Complex(params.delta * params.r, 0.0), params.n}};
      ps.total = params.n;
      ps.region = Region::Disc;
      ps.radius = params.r;
      Witness w = circle_star_witness(kind, ps, params.r, 0.0);
      w.n = params.n;
      w.delta = params.delta;
      return w;
    }
    case WitnessKind::AxisStar: {
      if (!params.pole_set) fail(Errc::BadParams, "axis_star needs a pole set");
      return axis_star_witness(*params.pole_set, params.position);
    }
    case WitnessKind::RhoP: {
      Witness w;
      w.kind = kind;
      w.domain = Domain::Axis;
      w.p = params.p;
      w.y0 = rho_pole_height(params.p);
      w.node = Complex(0.0, 0.0);
      w.rational = make_rational({Complex(1.0, 0.0)}, {{Complex(0.0, w.y0), 1}});
      w.target = make_target(*w.rational);
      return w;
    }
    case WitnessKind::SegmentJacobi: {
      if (params.n < 1) fail(Errc::BadParams, "segment_jacobi needs n >= 1");
      Witness w;
      w.kind = kind;
      w.domain = Domain::Segment;
      w.n = params.n;
      w.node = Complex(1.0, 0.0);
      w.rational = jacobi_extremal_polynomial(params.n);
      w.target = make_target(*w.rational);
      return w;
    }
    case WitnessKind::TrigStar: {
      if (params.n < 1) fail(Errc::BadParams, "trig_star needs n >= 1");
      Witness w;
      w.kind = kind;
      w.domain = Domain::Circle;
      w.n = params.n;
      w.node = Complex(1.0, 0.0);
      std::vector<Complex> num(2 * params.n + 2, Complex(1.0, 0.0));
      w.rational = make_rational(std::move(num), {{Complex(0.0, 0.0), params.n}});
      w.target = make_target(*w.rational);
      return w;
    }
  }
  fail(Errc::BadKind, "unknown witness kind");
}

std::vector<SharpnessItem> sharpness_suite() {
  std::vector<SharpnessItem> items;
  auto push = [&items](const std::string& name, double lhs, double rhs) {
    SharpnessItem it;
    it.name = name;
    it.report = make_report(lhs, rhs);
    it.equality = std::abs(lhs - rhs) <= 1e-8 * std::max(std::abs(rhs), 1e-30);
    items.push_back(std::move(it));
  };

  {  // ||R*||_2^2 = 2 pi r ||R*||_inf^2 / (||mu||_inf + 1) on the circle
    PoleSet ps;
    ps.entries = {{Complex(0.5, 0.0), 1}, {Complex(-0.2, 0.3), 1}};
    ps.total = 2;
    ps.region = Region::Disc;
    ps.radius = 1.0;
    Witness w = extremal_witness(WitnessKind::CircleStar, {.pole_set = ps});
    const double norm2 = norm_circle_2m(w.target, 1.0, 1, kPhiEval).real();
    const double sup = sup_circle(w.target, 1.0);
    const double musup = mu_sup({ps, Domain::Circle, 1.0});
    push("circle_star_extrema", norm2, kTwoPi * sup * sup / (musup + 1.0));
  }
  {  // equality in the annulus (inf,2)-inequality for the delta witness
    Witness w = extremal_witness(WitnessKind::CircleDeltaStar, {.n = 2, .delta = 0.5});
    const double sup = sup_circle(w.target, 1.0);
    const double norm2 = std::sqrt(norm_circle_2m(w.target, 1.0, 1, kPhiEval).real());
    const double c = nikolskii_constant_geometric(Domain::Circle, 2.0,
                                                  std::numeric_limits<double>::infinity(), 2, 0.5);
    push("circle_delta_star_n2", sup, c * norm2);
  }
  {  // ||R*||_2^2 = pi ||R*||_inf^2 / ||mu_*||_inf on the axis
    PoleSet ps;
    ps.entries = {{Complex(0.4, 1.0), 1}, {Complex(-0.7, 0.6), 1}};
    ps.total = 2;
    ps.region = Region::UpperHalfPlane;
    Witness w = extremal_witness(WitnessKind::AxisStar, {.pole_set = ps});
    const double norm2 = norm_axis_2m(w.target, 1, kPhiEval).real();
    const double sup = sup_axis(w.target);
    const double musup = mu_sup({ps, Domain::Axis, 1.0});
    push("axis_star_extrema", norm2, kPi * sup * sup / musup);
  }
  for (int m = 1; m <= 2; ++m) {  // rho(2m;.) attains the pointwise bound at x = 0
    Witness w = extremal_witness(WitnessKind::RhoP, {.p = 2.0 * m});
    BoundReport b = pointwise_axis(w.target, m, 0.0);
    push(m == 1 ? "rho2_pointwise" : "rho4_pointwise", b.lhs, b.rhs);
  }
  for (int m = 1; m <= 2; ++m) {  // d(rho;2) = 2, d(rho;4) = 4
    const double p = 2.0 * m;
    Witness w = extremal_witness(WitnessKind::RhoP, {.p = p});
    SimplePartialFraction rho{{Complex(0.0, w.y0)}};
    SpfBounds b = spf_bounds(rho, p);
    push(m == 1 ? "rho2_d_sharp" : "rho4_d_sharp", b.d, 2.0 * m_p(p));
  }
  for (int n = 1; n <= 2; ++n) {  // |P*_n(1)| = sqrt((2n+1)/pi) ||P*_n||_2
    Witness w = extremal_witness(WitnessKind::SegmentJacobi, {.n = n});
    const double sup = sup_segment(w.target);
    const double norm2 = std::sqrt(norm_segment_2m(w.target, 1, kPhiEval).real());
    push("jacobi_p" + std::to_string(n), sup, std::sqrt((2.0 * n + 1.0) / kPi) * norm2);
  }
  {  // T*_{n+1,n} attains the (inf,2) trigonometric constant, n = 2
    const int n = 2;
    Witness w = extremal_witness(WitnessKind::TrigStar, {.n = n});
    const double sup = sup_circle(w.target, 1.0);
    const double norm2 = std::sqrt(norm_circle_2m(w.target, 1.0, 1, kPhiEval).real());
    // trig norms over [0,2pi] coincide with circle norms at r = 1
    push("trig_star_n2", sup,
         trig_constant(2.0, std::numeric_limits<double>::infinity(), n) * norm2);
  }
  {  // P_n(z) = (z^{n+1} - r^{n+1})/(z - r) attains the (inf,2) polynomial bound
    const int n = 3;
    std::vector<Complex> num(n + 1, Complex(1.0, 0.0));  // r = 1: all ones
    RationalFunction P = make_rational(std::move(num), {});
    QuadTarget t = make_target(P);
    const double sup = sup_circle(t, 1.0);
    const double norm2 = std::sqrt(norm_circle_2m(t, 1.0, 1, kPhiEval).real());
    push("polynomial_circle_n3", sup,
         laurent_constant_circle(2.0, std::numeric_limits<double>::infinity(), 0, n) * norm2);
  }
  return items;
}

}  // namespace ratquad
