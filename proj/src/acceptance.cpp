#include "ratquad/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "ratquad/inequalities.hpp"
#include "ratquad/json_io.hpp"
#include "ratquad/notches.hpp"
#include "ratquad/oracle.hpp"
#include "ratquad/quadrature.hpp"
#include "ratquad/randgen.hpp"

namespace ratquad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[192];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

struct Tracker {
  int checked = 0;
  int failed = 0;
  double worst = 0.0;
  void check(double err, double tol) {
    ++checked;
    worst = std::max(worst, err);
    if (!(err <= tol)) ++failed;
  }
  bool pass() const { return checked > 0 && failed == 0; }
};


// ---- criterion 1: quadrature exactness against the oracle --------------------

CriterionResult criterion_quadrature(uint64_t seed) {
  Tracker t;
  bool counts_ok = true;
  const Domain domains[4] = {Domain::Circle, Domain::Axis, Domain::Semiaxis, Domain::Segment};
  for (int di = 0; di < 4; ++di) {
    const Domain d = domains[di];
    Rng rng = Rng::stream(seed, 100 + di);
    for (int i = 0; i < 200; ++i) {
      RationalFunction R = random_rational(rng, d);
      const int m = rng.uniform_int(1, 3);
      const double phi = rng.uniform(0.05, kTwoPi - 0.05);
      const int n = R.degree();
      QuadratureResult q;
      oracle::IntegralEstimate o;
      int expected = 0;
      switch (d) {
        case Domain::Circle: {
          q = norm_circle_2m(R, 1.0, m, phi);
          expected = m * n + 1;
          o = oracle::circle(
              [&](double th) {
                return std::pow(std::abs(eval(R, Complex(std::cos(th), std::sin(th)))), 2.0 * m);
              },
              1.0);
          break;
        }
        case Domain::Axis: {
          q = norm_axis_2m(R, m, phi);
          expected = m * n;
          o = oracle::axis(
              [&](double x) { return std::pow(std::abs(eval(R, Complex(x, 0.0))), 2.0 * m); });
          break;
        }
        case Domain::Semiaxis: {
          q = norm_semiaxis_2m(R, m, phi, SemiaxisWeight::InvSqrt);
          expected = 2 * m * n;
          o = oracle::semiaxis(
              [&](double x) { return std::pow(std::abs(eval(R, Complex(x, 0.0))), 2.0 * m); },
              oracle::Weight::InvSqrt);
          break;
        }
        case Domain::Segment: {
          q = norm_segment_2m(R, m, phi);
          expected = 2 * n * m + 1;
          o = oracle::segment(
              [&](double x) { return std::pow(std::abs(eval(R, Complex(x, 0.0))), 2.0 * m); });
          break;
        }
      }
      if (static_cast<int>(q.contributions.size()) != expected) counts_ok = false;
      if (!o.converged) {
        t.check(kInf, 1.0);
        continue;
      }
      t.check(std::abs(q.real() - o.value) / (1.0 + std::abs(o.value)), 1e-8);

      // the plain integration identities, where convergent
      if (d == Domain::Circle) {
        QuadratureResult qi = integrate_circle(R, 1.0, phi);
        auto re = oracle::circle(
            [&](double th) {
              return eval(R, Complex(std::cos(th), std::sin(th))).real();
            },
            1.0);
        auto im = oracle::circle(
            [&](double th) {
              return eval(R, Complex(std::cos(th), std::sin(th))).imag();
            },
            1.0);
        if (re.converged && im.converged) {
          const Complex ov(re.value, im.value);
          t.check(std::abs(qi.value - ov) / (1.0 + std::abs(ov)), 1e-8);
        }
      } else if (d == Domain::Axis && static_cast<long>(m) * make_target(R).gap() >= 2) {
        QuadratureResult qi = integrate_axis(R, m, phi);
        auto re = oracle::axis(
            [&](double x) { return pow_int(eval(R, Complex(x, 0.0)), m).real(); });
        auto im = oracle::axis(
            [&](double x) { return pow_int(eval(R, Complex(x, 0.0)), m).imag(); });
        if (re.converged && im.converged) {
          const Complex ov(re.value, im.value);
          t.check(std::abs(qi.value - ov) / (1.0 + std::abs(ov)), 1e-8);
        }
      } else if (d == Domain::Semiaxis) {
        QuadratureResult qi = integrate_semiaxis(R, m, phi, SemiaxisWeight::InvSqrt);
        auto re = oracle::semiaxis(
            [&](double x) { return pow_int(eval(R, Complex(x, 0.0)), m).real(); },
            oracle::Weight::InvSqrt);
        auto im = oracle::semiaxis(
            [&](double x) { return pow_int(eval(R, Complex(x, 0.0)), m).imag(); },
            oracle::Weight::InvSqrt);
        if (re.converged && im.converged) {
          const Complex ov(re.value, im.value);
          t.check(std::abs(qi.value - ov) / (1.0 + std::abs(ov)), 1e-8);
        }
      } else if (d == Domain::Segment) {
        QuadratureResult qi = integrate_segment(R, phi);
        auto re = oracle::segment([&](double x) { return eval(R, Complex(x, 0.0)).real(); });
        auto im = oracle::segment([&](double x) { return eval(R, Complex(x, 0.0)).imag(); });
        if (re.converged && im.converged) {
          const Complex ov(re.value, im.value);
          t.check(std::abs(qi.value - ov) / (1.0 + std::abs(ov)), 1e-8);
        }
      }
    }
  }
  CriterionResult r{1, "quadrature-exactness", t.pass() && counts_ok,
                    fmt("%d comparisons, worst err %.2e", t.checked, t.worst) +
                        (counts_ok ? ", node counts exact" : ", NODE COUNT MISMATCH")};
  return r;
}

// ---- criterion 2: phi-invariance ----------------------------------------------

CriterionResult criterion_phi_invariance(uint64_t seed) {
  Tracker t;
  const Domain domains[4] = {Domain::Circle, Domain::Axis, Domain::Semiaxis, Domain::Segment};
  for (int di = 0; di < 4; ++di) {
    const Domain d = domains[di];
    Rng rng = Rng::stream(seed, 200 + di);
    for (int i = 0; i < 200; ++i) {
      RationalFunction R = random_rational(rng, d);
      const int m = rng.uniform_int(1, 3);
      double lo = kInf, hi = -kInf;
      for (int k = 0; k < 8; ++k) {
        const double phi = rng.uniform(0.05, kTwoPi - 0.05);
        double v = 0.0;
        switch (d) {
          case Domain::Circle: v = norm_circle_2m(R, 1.0, m, phi).real(); break;
          case Domain::Axis: v = norm_axis_2m(R, m, phi).real(); break;
          case Domain::Semiaxis:
            v = norm_semiaxis_2m(R, m, phi, SemiaxisWeight::InvSqrt).real();
            break;
          case Domain::Segment: v = norm_segment_2m(R, m, phi).real(); break;
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      t.check((hi - lo) / std::max(std::abs(hi), 1e-300), 1e-9);
    }
  }
  return {2, "phi-invariance", t.pass(),
          fmt("%d instances x 8 phi, worst rel spread %.2e", t.checked, t.worst)};
}

// ---- criterion 3: known closed-form values ------------------------------------

CriterionResult criterion_known_values(uint64_t) {
  Tracker t;
  RationalFunction R = make_rational({1.0}, {{Complex(0.0, 1.0), 1}});
  t.check(std::abs(norm_axis_2m(R, 1, 2.5).real() - kPi), 1e-10);
  t.check(std::abs(norm_axis_2m(R, 2, 2.5).real() - 0.5 * kPi), 1e-10);
  RationalFunction S = make_rational({1.0}, {{Complex(-1.0, 0.0), 1}});
  t.check(std::abs(integrate_semiaxis(S, 1, 2.5, SemiaxisWeight::InvSqrt).value.real() - kPi),
          1e-10);
  return {3, "known-values", t.pass(), fmt("3 identities, worst abs err %.2e", t.worst)};
}

// ---- criterion 4: example-4 sharpness -----------------------------------------

CriterionResult criterion_rho_sharpness(uint64_t) {
  Tracker t;
  t.check(std::abs(rho_pole_height(2.0) - kPi), 1e-12);
  t.check(std::abs(rho_pole_height(4.0) - 0.5 * std::cbrt(4.0 * kPi)), 1e-12);
  for (int m = 1; m <= 2; ++m) {
    Witness w = extremal_witness(WitnessKind::RhoP, {.p = 2.0 * m});
    const double norm = norm_axis_2m(w.target, m, 2.5).real();
    t.check(std::abs(norm - 1.0), 1e-8);
    BoundReport b = pointwise_axis(w.target, m, 0.0);
    t.check(std::abs(b.lhs - b.rhs) / std::abs(b.rhs), 1e-8);
  }
  return {4, "rho-p-sharpness", t.pass(), fmt("6 checks, worst err %.2e", t.worst)};
}

// ---- criterion 5: example-2 sharpness -----------------------------------------

CriterionResult criterion_annulus_sharpness(uint64_t) {
  Tracker t;
  for (int n = 1; n <= 3; ++n)
    for (double delta : {0.3, 0.5}) {
      Witness w = extremal_witness(WitnessKind::CircleDeltaStar, {.n = n, .delta = delta});
      const double sup = sup_circle(w.target, 1.0);
      const double norm2 = std::sqrt(norm_circle_2m(w.target, 1.0, 1, 0.9).real());
      const double c = nikolskii_constant_geometric(Domain::Circle, 2.0, kInf, n, delta);
      t.check(std::abs(sup - c * norm2) / (c * norm2), 1e-8);
    }
  return {5, "annulus-witness-sharpness", t.pass(),
          fmt("%d witnesses, worst rel err %.2e", t.checked, t.worst)};
}

// ---- criterion 6: segment sharpness -------------------------------------------

CriterionResult criterion_segment_sharpness(uint64_t) {
  Tracker t;
  bool exact_ok = true;
  for (int n = 1; n <= 3; ++n) {
    Witness w = extremal_witness(WitnessKind::SegmentJacobi, {.n = n});
    const double at1 = std::abs(eval(*w.rational, Complex(1.0, 0.0)));
    if (at1 != 2.0 * n + 1.0) exact_ok = false;
    const double sup = sup_segment(w.target);
    const double norm2 = std::sqrt(norm_segment_2m(w.target, 1, 0.9).real());
    const double want = std::sqrt((2.0 * n + 1.0) / kPi) * norm2;
    t.check(std::abs(sup - want) / want, 1e-8);
  }
  return {6, "segment-polynomial-sharpness", t.pass() && exact_ok,
          fmt("3 witnesses, worst rel err %.2e", t.worst) +
              (exact_ok ? ", P(1) exact" : ", P(1) NOT EXACT")};
}

// ---- criterion 7: SPF d-bounds -------------------------------------------------

CriterionResult criterion_spf_bounds(uint64_t seed) {
  Tracker t;
  for (int m = 1; m <= 2; ++m) {
    const double p = 2.0 * m;
    const double y0 = rho_pole_height(p);
    SimplePartialFraction rho{{Complex(0.0, y0)}};
    SpfBounds b = spf_bounds(rho, p);
    t.check(std::abs(b.d - 2.0 * m_p(p)), 1e-8);
  }
  Rng rng = Rng::stream(seed, 700);
  for (int i = 0; i < 100; ++i) {
    SimplePartialFraction rho = random_spf_one_sided(rng, 5, rng.coin());
    for (double p : {2.0, 3.0, 4.0, 6.0}) {
      SpfBounds b = spf_bounds(rho, p);
      t.check(b.upper.holds && b.lower.holds ? 0.0 : 1.0, 0.5);
    }
  }
  return {7, "spf-d-bounds", t.pass(), fmt("%d checks, worst %.2e", t.checked, t.worst)};
}

// ---- criterion 8: mixed SPF bound ----------------------------------------------

CriterionResult criterion_spf_mixed(uint64_t seed) {
  Tracker t;
  Rng rng = Rng::stream(seed, 800);
  const std::pair<double, double> pq[3] = {{2.0, 4.0}, {2.0, kInf}, {3.0, 6.0}};
  for (int i = 0; i < 100; ++i) {
    SimplePartialFraction rho = random_spf_two_sided(rng, 4);
    for (const auto& [p, q] : pq) {
      BoundReport b = spf_mixed_bound(rho, p, q);
      t.check(b.holds ? 0.0 : 1.0, 0.5);
    }
  }
  return {8, "spf-mixed-bound", t.pass(), fmt("%d checks all hold", t.checked)};
}

// ---- criterion 9: semiaxis SPF bound -------------------------------------------

CriterionResult criterion_spf_semiaxis(uint64_t seed) {
  Tracker t;
  Rng rng = Rng::stream(seed, 900);
  for (int i = 0; i < 50; ++i) {
    const double alpha = (i % 2 == 0) ? 0.2 : 0.7;
    const int m = (i % 4 < 2) ? 1 : 2;
    SimplePartialFraction rho = random_spf_beam(rng, 4, alpha);
    SpfSemiaxisReport rep = spf_semiaxis_bound(rho, alpha, m);
    t.check(rep.sup_vs_S.holds && rep.S_vs_rhs.holds ? 0.0 : 1.0, 0.5);
  }
  return {9, "spf-semiaxis-bound", t.pass(), fmt("%d instances all hold", t.checked)};
}

// ---- criterion 10: constant dominance ------------------------------------------

CriterionResult criterion_dominance(uint64_t) {
  Tracker t;
  double worst_ratio = 0.0;
  for (double p : {1.0, 2.0, 4.0})
    for (double q : {2.0, 4.0, kInf}) {
      if (!(std::isinf(q) || q > p)) continue;
      for (int n = 1; n <= 6; ++n)
        for (double delta : {0.1, 0.5, 0.9}) {
          const double ours = nikolskii_constant_geometric(Domain::Circle, p, q, n, delta);
          const double theirs = baranov_constant(p, q, n, delta);
          worst_ratio = std::max(worst_ratio, ours / theirs);
          t.check(ours <= theirs * (1.0 + 1e-12) ? 0.0 : 1.0, 0.5);
        }
    }
  return {10, "constant-dominance", t.pass(),
          fmt("%d grid points, max ratio %.6f", t.checked, worst_ratio)};
}

// ---- criterion 11: prescribed-node property ------------------------------------

CriterionResult criterion_prescribed_node(uint64_t seed) {
  Tracker t;
  const Domain domains[4] = {Domain::Circle, Domain::Axis, Domain::Semiaxis, Domain::Segment};
  for (int di = 0; di < 4; ++di) {
    const Domain d = domains[di];
    Rng rng = Rng::stream(seed, 1100 + di);
    for (int i = 0; i < 100; ++i) {
      RationalFunction R = random_rational(rng, d);
      const int m = rng.uniform_int(1, 2);
      if (d == Domain::Circle || d == Domain::Segment) {
        PoleSet ps = d == Domain::Circle ? reflect_circle(R, 1.0) : segment_lift(R);
        const double theta = rng.uniform(0.0, kTwoPi);
        const double phi = prescribe_phi_circle(ps, 1.0, m, theta);
        NotchSet ns = notches_circle(ps, 1.0, m, phi);
        const Complex target(std::cos(theta), std::sin(theta));
        double best = kInf;
        for (const auto& nd : ns.nodes) best = std::min(best, std::abs(nd.value() - target));
        t.check(best, 1e-10);
      } else {
        PoleSet ps = d == Domain::Axis ? reflect_axis(R) : semiaxis_lift(R);
        const double x = rng.uniform(-5.0, 5.0);
        const double phi = prescribe_phi_axis(ps, m, x);
        NotchSet ns = d == Domain::Axis ? notches_axis(ps, m, phi) : notches_semiaxis(ps, m, phi);
        double best = kInf;
        for (int k = 0; k < ns.finite_count(); ++k)
          best = std::min(best, std::abs(ns.params[k] - x));
        t.check(best, 1e-10);
      }
    }
  }
  return {11, "prescribed-node", t.pass(),
          fmt("%d round trips, worst distance %.2e", t.checked, t.worst)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(uint64_t seed) {
  using Fn = CriterionResult (*)(uint64_t);
  const Fn fns[] = {criterion_quadrature,        criterion_phi_invariance,
                    criterion_known_values,      criterion_rho_sharpness,
                    criterion_annulus_sharpness, criterion_segment_sharpness,
                    criterion_spf_bounds,        criterion_spf_mixed,
                    criterion_spf_semiaxis,      criterion_dominance,
                    criterion_prescribed_node};
  std::vector<std::future<CriterionResult>> futures;
  futures.reserve(std::size(fns));
  for (Fn fn : fns) futures.push_back(std::async(std::launch::async, fn, seed));
  std::vector<CriterionResult> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace ratquad
