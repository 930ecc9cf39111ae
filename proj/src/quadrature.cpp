#include "ratquad/quadrature.hpp"

#include <cmath>

#include "ratquad/blaschke.hpp"

namespace ratquad {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

struct ComplexSum {
  KahanSum re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return {re.s, im.s}; }
};

double abs2m(Complex v, int m) {
  // |v|^{2m}: square once, then integer power
  double p = std::norm(v);
  double acc = 1.0;
  long e = m;
  while (e > 0) {
    if (e & 1) acc *= p;
    p *= p;
    e >>= 1;
  }
  return acc;
}

// sum_k n_k Im z_k over the reflected/lifted pole set = lim x^2 mu_*(x)
double mu_mass(const PoleSet& ps) {
  double s = 0.0;
  for (const auto& p : ps.entries) s += p.multiplicity * p.location.imag();
  return s;
}

QuadratureResult assemble(Domain domain, int m, double phi, bool norm_mode,
                          std::vector<Complex> contributions, bool dropped_inf) {
  QuadratureResult r;
  r.domain = domain;
  r.m = m;
  r.phi = phi;
  r.norm_mode = norm_mode;
  r.dropped_inf = dropped_inf;
  ComplexSum sum;
  for (const auto& c : contributions) sum.add(c);
  r.contributions = std::move(contributions);
  r.value = norm_mode ? Complex(sum.value().real(), 0.0) : sum.value();
  return r;
}

}  // namespace

int QuadTarget::pole_degree() const {
  int s = 0;
  for (const auto& p : poles) s += p.multiplicity;
  return s;
}

QuadTarget make_target(const RationalFunction& R) {
  QuadTarget t;
  t.poles = R.poles;
  t.num_degree = R.numerator_degree();
  // the stored denominator prod (z - z_k)^{n_k} is monic, so the behaviour at
  // infinity of a proper fraction is numerator.back() / z^gap
  t.leading = R.numerator.back();
  RationalFunction copy = R;
  t.f = [copy](Complex z) { return eval(copy, z); };
  return t;
}

QuadratureResult integrate_circle(const QuadTarget& t, double r, double phi) {
  PoleSet ps = reflect_circle(t.poles, t.num_degree, r);
  NotchSet ns = notches_circle(ps, r, 1, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (size_t k = 0; k < ns.nodes.size(); ++k)
    contrib.push_back(2.0 * kPi * r * t.f(ns.nodes[k].value()) / (ns.mu[k] + 1.0));
  return assemble(Domain::Circle, 1, ns.phi, false, std::move(contrib), false);
}

QuadratureResult norm_circle_2m(const QuadTarget& t, double r, int m, double phi) {
  PoleSet ps = reflect_circle(t.poles, t.num_degree, r);
  NotchSet ns = notches_circle(ps, r, m, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (size_t k = 0; k < ns.nodes.size(); ++k)
    contrib.push_back(2.0 * kPi * r * abs2m(t.f(ns.nodes[k].value()), m) / (m * ns.mu[k] + 1.0));
  return assemble(Domain::Circle, m, ns.phi, true, std::move(contrib), false);
}

QuadratureResult integrate_axis(const QuadTarget& t, int m, double phi) {
  if (!t.proper()) fail(Errc::NotProper, "axis integration requires a proper fraction");
  if (static_cast<long>(m) * t.gap() < 2)
    fail(Errc::DivergentIntegral, "int R^m over the axis needs m * (degree gap) >= 2");
  PoleSet ps = reflect_axis(t.poles, t.num_degree);
  NotchSet ns = notches_axis(ps, m, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (int k = 0; k < ns.finite_count(); ++k)
    contrib.push_back(kPi / m * pow_int(t.f(ns.nodes[k].value()), m) / ns.mu[k]);
  if (ns.infinite_node) {
    // R^m(x)/mu_*(x) -> leading^m / mu_mass exactly when m*gap == 2, else 0
    Complex lim = (static_cast<long>(m) * t.gap() == 2) ? pow_int(t.leading, m) / mu_mass(ps)
                                                        : Complex(0.0, 0.0);
    contrib.push_back(kPi / m * lim);
  }
  return assemble(Domain::Axis, m, ns.phi, false, std::move(contrib), ns.infinite_node);
}

QuadratureResult norm_axis_2m(const QuadTarget& t, int m, double phi) {
  if (!t.proper()) fail(Errc::NotProper, "axis norms require a proper fraction");
  PoleSet ps = reflect_axis(t.poles, t.num_degree);
  NotchSet ns = notches_axis(ps, m, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (int k = 0; k < ns.finite_count(); ++k)
    contrib.push_back(kPi / m * abs2m(t.f(ns.nodes[k].value()), m) / ns.mu[k]);
  if (ns.infinite_node) {
    double lim = (static_cast<long>(m) * t.gap() == 1) ? abs2m(t.leading, m) / mu_mass(ps) : 0.0;
    contrib.push_back(kPi / m * lim);
  }
  return assemble(Domain::Axis, m, ns.phi, true, std::move(contrib), ns.infinite_node);
}

QuadratureResult integrate_semiaxis(const QuadTarget& t, int m, double phi, SemiaxisWeight w) {
  if (!t.proper()) fail(Errc::NotProper, "semiaxis integration requires a proper fraction");
  if (w == SemiaxisWeight::Sqrt && static_cast<long>(m) * t.gap() < 2)
    fail(Errc::DivergentIntegral, "int R^m sqrt(x) dx needs m * (degree gap) >= 2");
  PoleSet ps = semiaxis_lift(t.poles, t.num_degree);
  NotchSet ns = notches_semiaxis(ps, m, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (int k = 0; k < ns.finite_count(); ++k) {
    const double x = ns.params[k];
    Complex term = kPi / m * pow_int(t.f(Complex(x * x, 0.0)), m) / ns.mu[k];
    if (w == SemiaxisWeight::Sqrt) term *= x * x;
    contrib.push_back(term);
  }
  if (ns.infinite_node) {
    // in the substituted axis problem the integrand decays like
    // x^{2 eps - 2 m gap}, eps = 1 for the sqrt weight, 0 otherwise
    const long mg = static_cast<long>(m) * t.gap();
    const bool survives = (w == SemiaxisWeight::InvSqrt) ? (mg == 1) : (mg == 2);
    Complex lim = survives ? pow_int(t.leading, m) / mu_mass(ps) : Complex(0.0, 0.0);
    contrib.push_back(kPi / m * lim);
  }
  return assemble(Domain::Semiaxis, m, ns.phi, false, std::move(contrib), ns.infinite_node);
}

QuadratureResult norm_semiaxis_2m(const QuadTarget& t, int m, double phi, SemiaxisWeight w) {
  if (!t.proper()) fail(Errc::NotProper, "semiaxis norms require a proper fraction");
  PoleSet ps = semiaxis_lift(t.poles, t.num_degree);
  NotchSet ns = notches_semiaxis(ps, m, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (int k = 0; k < ns.finite_count(); ++k) {
    const double x = ns.params[k];
    double term = kPi / m * abs2m(t.f(Complex(x * x, 0.0)), m) / ns.mu[k];
    if (w == SemiaxisWeight::Sqrt) term *= x * x;
    contrib.push_back(term);
  }
  if (ns.infinite_node) {
    const long mg = static_cast<long>(m) * t.gap();
    const bool survives = (w == SemiaxisWeight::Sqrt) && (mg == 1);
    double lim = survives ? abs2m(t.leading, m) / mu_mass(ps) : 0.0;
    contrib.push_back(kPi / m * lim);
  }
  return assemble(Domain::Semiaxis, m, ns.phi, true, std::move(contrib), ns.infinite_node);
}

QuadratureResult integrate_segment(const QuadTarget& t, double phi) {
  PoleSet ps = segment_lift(t.poles, t.num_degree);
  NotchSet ns = notches_segment(ps, 1, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (size_t k = 0; k < ns.nodes.size(); ++k)
    contrib.push_back(kPi * t.f(Complex(ns.x_proj[k], 0.0)) / (ns.mu[k] + 1.0));
  return assemble(Domain::Segment, 1, ns.phi, false, std::move(contrib), false);
}

QuadratureResult norm_segment_2m(const QuadTarget& t, int m, double phi) {
  PoleSet ps = segment_lift(t.poles, t.num_degree);
  NotchSet ns = notches_segment(ps, m, phi);
  std::vector<Complex> contrib;
  contrib.reserve(ns.nodes.size());
  for (size_t k = 0; k < ns.nodes.size(); ++k)
    contrib.push_back(kPi * abs2m(t.f(Complex(ns.x_proj[k], 0.0)), m) / (m * ns.mu[k] + 1.0));
  return assemble(Domain::Segment, m, ns.phi, true, std::move(contrib), false);
}

QuadratureResult integrate_circle(const RationalFunction& R, double r, double phi) {
  return integrate_circle(make_target(R), r, phi);
}
QuadratureResult norm_circle_2m(const RationalFunction& R, double r, int m, double phi) {
  return norm_circle_2m(make_target(R), r, m, phi);
}
QuadratureResult integrate_axis(const RationalFunction& R, int m, double phi) {
  return integrate_axis(make_target(R), m, phi);
}
QuadratureResult norm_axis_2m(const RationalFunction& R, int m, double phi) {
  return norm_axis_2m(make_target(R), m, phi);
}
QuadratureResult integrate_semiaxis(const RationalFunction& R, int m, double phi,
                                    SemiaxisWeight w) {
  return integrate_semiaxis(make_target(R), m, phi, w);
}
QuadratureResult norm_semiaxis_2m(const RationalFunction& R, int m, double phi, SemiaxisWeight w) {
  return norm_semiaxis_2m(make_target(R), m, phi, w);
}
QuadratureResult integrate_segment(const RationalFunction& R, double phi) {
  return integrate_segment(make_target(R), phi);
}
QuadratureResult norm_segment_2m(const RationalFunction& R, int m, double phi) {
  return norm_segment_2m(make_target(R), m, phi);
}

}  // namespace ratquad
