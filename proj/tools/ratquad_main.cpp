// Command-line front end: quadrature nodes, exact integrals and norms,
// Jackson-Nikolskii constants, pointwise bounds, extremal witnesses, and the
// full verification suite. All structured output is JSON (17 significant
// digits) on stdout; errors are machine-readable JSON on stderr.
//
// Exit codes: 0 success, 1 bound violation (suite), 2 input error,
// 3 convergence failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "ratquad/acceptance.hpp"
#include "ratquad/inequalities.hpp"
#include "ratquad/json_io.hpp"
#include "ratquad/notches.hpp"
#include "ratquad/oracle.hpp"
#include "ratquad/quadrature.hpp"

namespace rq = ratquad;
using rq::Complex;
using rq::Domain;
using rq::Json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

Domain parse_domain(const std::string& s) {
  if (s == "circle") return Domain::Circle;
  if (s == "axis") return Domain::Axis;
  if (s == "semiaxis") return Domain::Semiaxis;
  if (s == "segment") return Domain::Segment;
  rq::fail(rq::Errc::BadParams, "unknown domain: " + s);
}

double parse_q(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return kInf;
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    rq::fail(rq::Errc::BadParams, "cannot parse q: " + s);
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) rq::fail(rq::Errc::BadInput, "cannot open spec file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    rq::fail(rq::Errc::BadInput, std::string("JSON parse error: ") + e.what());
  }
  return j;
}

rq::PoleSet domain_pole_set(const rq::RationalFunction& R, Domain d, double r) {
  switch (d) {
    case Domain::Circle: return rq::reflect_circle(R, r);
    case Domain::Axis: return rq::reflect_axis(R);
    case Domain::Semiaxis: return rq::semiaxis_lift(R);
    case Domain::Segment: return rq::segment_lift(R);
  }
  rq::fail(rq::Errc::BadParams, "unknown domain");
}

rq::NotchSet domain_notches(const rq::PoleSet& ps, Domain d, double r, int m, double phi) {
  switch (d) {
    case Domain::Circle: return rq::notches_circle(ps, r, m, phi);
    case Domain::Axis: return rq::notches_axis(ps, m, phi);
    case Domain::Semiaxis: return rq::notches_semiaxis(ps, m, phi);
    case Domain::Segment: return rq::notches_segment(ps, m, phi);
  }
  rq::fail(rq::Errc::BadParams, "unknown domain");
}

std::string f17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_nodes_csv(const rq::NotchSet& ns) {
  const bool seg = ns.domain == Domain::Segment;
  std::printf(seg ? "index,param,x,mu,residual\n" : "index,param,mu,residual\n");
  for (int k = 0; k < ns.count(); ++k) {
    const bool inf = ns.nodes[k].at_infinity;
    std::string param = inf ? "inf" : f17(ns.params[k]);
    std::string mu = inf ? "" : f17(ns.mu[k]);
    if (seg)
      std::printf("%d,%s,%s,%s,%s\n", k, param.c_str(), f17(ns.x_proj[k]).c_str(), mu.c_str(),
                  f17(ns.residuals[k]).c_str());
    else
      std::printf("%d,%s,%s,%s\n", k, param.c_str(), mu.c_str(), f17(ns.residuals[k]).c_str());
  }
}

// oracle cross-check of a quadrature result; returns (oracle json, discrepancy)
std::pair<Json, double> verify_quadrature(const rq::RationalFunction& R, Domain d, double r,
                                          int m, rq::SemiaxisWeight w, bool norm_mode,
                                          const rq::QuadratureResult& q) {
  auto dens_norm = [&](Complex z) { return std::pow(std::abs(rq::eval(R, z)), 2.0 * m); };
  auto dens_pow = [&](Complex z) { return rq::pow_int(rq::eval(R, z), norm_mode ? 1 : m); };
  rq::oracle::Weight ow =
      w == rq::SemiaxisWeight::InvSqrt ? rq::oracle::Weight::InvSqrt : rq::oracle::Weight::Sqrt;
  if (norm_mode) {
    rq::oracle::IntegralEstimate est;
    switch (d) {
      case Domain::Circle:
        est = rq::oracle::circle(
            [&](double th) { return dens_norm(r * Complex(std::cos(th), std::sin(th))); }, r);
        break;
      case Domain::Axis:
        est = rq::oracle::axis([&](double x) { return dens_norm(Complex(x, 0.0)); });
        break;
      case Domain::Semiaxis:
        est = rq::oracle::semiaxis([&](double x) { return dens_norm(Complex(x, 0.0)); }, ow);
        break;
      case Domain::Segment:
        est = rq::oracle::segment([&](double x) { return dens_norm(Complex(x, 0.0)); });
        break;
    }
    if (!est.converged) rq::fail(rq::Errc::ConvergenceFailure, "oracle did not converge");
    return {Json(est.value), std::abs(q.value.real() - est.value)};
  }
  rq::oracle::IntegralEstimate re, im;
  switch (d) {
    case Domain::Circle:
      re = rq::oracle::circle(
          [&](double th) { return dens_pow(r * Complex(std::cos(th), std::sin(th))).real(); }, r);
      im = rq::oracle::circle(
          [&](double th) { return dens_pow(r * Complex(std::cos(th), std::sin(th))).imag(); }, r);
      break;
    case Domain::Axis:
      re = rq::oracle::axis([&](double x) { return dens_pow(Complex(x, 0.0)).real(); });
      im = rq::oracle::axis([&](double x) { return dens_pow(Complex(x, 0.0)).imag(); });
      break;
    case Domain::Semiaxis:
      re = rq::oracle::semiaxis([&](double x) { return dens_pow(Complex(x, 0.0)).real(); }, ow);
      im = rq::oracle::semiaxis([&](double x) { return dens_pow(Complex(x, 0.0)).imag(); }, ow);
      break;
    case Domain::Segment:
      re = rq::oracle::segment([&](double x) { return dens_pow(Complex(x, 0.0)).real(); });
      im = rq::oracle::segment([&](double x) { return dens_pow(Complex(x, 0.0)).imag(); });
      break;
  }
  if (!re.converged || !im.converged)
    rq::fail(rq::Errc::ConvergenceFailure, "oracle did not converge");
  const Complex ov(re.value, im.value);
  return {Json::array({ov.real(), ov.imag()}), std::abs(q.value - ov)};
}

int run(int argc, char** argv) {
  CLI::App app{"quadrature with variable nodes for complex rational functions"};
  app.require_subcommand(1);

  std::string spec_path, domain_str = "circle", weight_str = "inv_sqrt", q_str = "inf";
  std::string kind_str, from_json_path;
  double r = 1.0, phi = 0.0, delta = 0.0, p = 2.0, theta = 0.0, x = 0.0, alpha = 0.0,
         position = 0.0, pw = 2.0;
  int m = 1, n = 0, n1 = 0, n2 = 0, sweep = 0;
  uint64_t seed = 12345;
  bool csv = false, verify = false, geometric = false, compare_baranov = false;
  bool has_theta = false, has_x = false, has_position = false;
  std::string family = "rational";

  auto add_domain = [&](CLI::App* c) { c->add_option("--domain", domain_str); };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--r", r);
    c->add_option("--m", m);
    c->add_option("--phi", phi);
    c->add_option("--spec", spec_path);
    c->add_option("--weight", weight_str)->check(CLI::IsMember({"inv_sqrt", "sqrt"}));
  };

  CLI::App* nodes = app.add_subcommand("nodes", "quadrature nodes for a spec");
  add_domain(nodes);
  add_common(nodes);
  nodes->add_flag("--csv", csv);
  nodes->add_option("--sweep", sweep);

  CLI::App* integrate = app.add_subcommand("integrate", "exact integral via variable nodes");
  add_domain(integrate);
  add_common(integrate);
  integrate->add_flag("--verify", verify);

  CLI::App* norm = app.add_subcommand("norm", "exact L^{2m} norm via variable nodes");
  add_domain(norm);
  add_common(norm);
  norm->add_flag("--verify", verify);

  CLI::App* constant = app.add_subcommand("constant", "Jackson-Nikolskii constants");
  add_domain(constant);
  constant->add_option("--p", p);
  constant->add_option("--q", q_str);
  constant->add_option("--n", n);
  constant->add_option("--n1", n1);
  constant->add_option("--n2", n2);
  constant->add_option("--delta", delta);
  constant->add_option("--r", r);
  constant->add_option("--spec", spec_path);
  constant->add_option("--family", family)
      ->check(CLI::IsMember({"rational", "polynomial", "laurent", "trig"}));
  constant->add_flag("--geometric", geometric);
  constant->add_flag("--compare-baranov", compare_baranov);

  CLI::App* bound = app.add_subcommand("bound", "pointwise and SPF bound reports");
  add_domain(bound);
  add_common(bound);
  bound->add_option("--theta", theta)->each([&](const std::string&) { has_theta = true; });
  bound->add_option("--x", x)->each([&](const std::string&) { has_x = true; });
  bound->add_option("--p", pw);
  bound->add_option("--q", q_str);
  bound->add_option("--alpha", alpha);

  CLI::App* extremal = app.add_subcommand("extremal", "extremal witness + sharpness report");
  extremal->add_option("--kind", kind_str)->required();
  extremal->add_option("--p", p);
  extremal->add_option("--n", n);
  extremal->add_option("--delta", delta);
  extremal->add_option("--r", r);
  extremal->add_option("--spec", spec_path);
  extremal->add_option("--position", position)->each([&](const std::string&) {
    has_position = true;
  });

  CLI::App* suite = app.add_subcommand("suite", "full verification suite");
  suite->add_option("--seed", seed);

  CLI::App* parse = app.add_subcommand("parse", "validate emitted JSON");
  parse->add_option("--from-json", from_json_path)->required();

  CLI11_PARSE(app, argc, argv);

  if (*nodes) {
    const Domain d = parse_domain(domain_str);
    rq::RationalFunction R = rq::rational_from_json(load_json(spec_path));
    rq::PoleSet ps = domain_pole_set(R, d, r);
    if (sweep > 0) {
      std::printf("phi,index,param\n");
      for (int j = 0; j < sweep; ++j) {
        const double ph = 2.0 * kPi * j / sweep;
        rq::NotchSet ns = domain_notches(ps, d, r, m, ph);
        for (int k = 0; k < ns.count(); ++k)
          std::printf("%s,%d,%s\n", f17(ph).c_str(), k,
                      ns.nodes[k].at_infinity ? "inf" : f17(ns.params[k]).c_str());
      }
      return 0;
    }
    rq::NotchSet ns = domain_notches(ps, d, r, m, phi);
    if (csv)
      print_nodes_csv(ns);
    else
      std::printf("%s\n", rq::dump_json17(rq::notchset_to_json(ns)).c_str());
    return 0;
  }

  if (*integrate || *norm) {
    const Domain d = parse_domain(domain_str);
    const bool norm_mode = static_cast<bool>(*norm);
    rq::RationalFunction R = rq::rational_from_json(load_json(spec_path));
    const rq::SemiaxisWeight w = weight_str == "sqrt" ? rq::SemiaxisWeight::Sqrt
                                                      : rq::SemiaxisWeight::InvSqrt;
    rq::QuadratureResult qres;
    switch (d) {
      case Domain::Circle:
        qres = norm_mode ? rq::norm_circle_2m(R, r, m, phi) : rq::integrate_circle(R, r, phi);
        break;
      case Domain::Axis:
        qres = norm_mode ? rq::norm_axis_2m(R, m, phi) : rq::integrate_axis(R, m, phi);
        break;
      case Domain::Semiaxis:
        qres = norm_mode ? rq::norm_semiaxis_2m(R, m, phi, w)
                         : rq::integrate_semiaxis(R, m, phi, w);
        break;
      case Domain::Segment:
        qres = norm_mode ? rq::norm_segment_2m(R, m, phi) : rq::integrate_segment(R, phi);
        break;
    }
    Json j = rq::quadrature_to_json(qres);
    if (verify) {
      auto [oj, disc] = verify_quadrature(R, d, r, m, w, norm_mode, qres);
      j["oracle"] = oj;
      j["discrepancy"] = disc;
    }
    std::printf("%s\n", rq::dump_json17(j).c_str());
    return 0;
  }

  if (*constant) {
    const Domain d = parse_domain(domain_str);
    const double q = parse_q(q_str);
    Json j;
    j["p"] = p;
    j["q"] = std::isinf(q) ? Json("inf") : Json(q);
    j["m_p"] = rq::m_p(p);
    double ours = 0.0;
    if (family == "polynomial") {
      ours = rq::polynomial_constant_segment(p, q, n);
    } else if (family == "laurent") {
      ours = rq::laurent_constant_circle(p, q, n1, n2, r);
    } else if (family == "trig") {
      ours = rq::trig_constant(p, q, n);
    } else if (geometric) {
      ours = rq::nikolskii_constant_geometric(d, p, q, n, delta, r);
      j["delta"] = delta;
      j["n"] = n;
    } else {
      rq::RationalFunction R = rq::rational_from_json(load_json(spec_path));
      rq::PoleSet ps = domain_pole_set(R, d, r);
      rq::WeightMu mu{ps, d, r};
      const double ms = rq::mu_sup(mu);
      ours = rq::nikolskii_constant_mu(d, ms, p, q, r);
      j["mu_sup"] = ms;
    }
    j["constant"] = ours;
    if (compare_baranov) {
      const double b = rq::baranov_constant(p, q, n, delta, r);
      j["baranov"] = b;
      j["ratio"] = ours / b;
    }
    std::printf("%s\n", rq::dump_json17(j).c_str());
    return 0;
  }

  if (*bound) {
    const Domain d = parse_domain(domain_str);
    Json spec = load_json(spec_path);
    Json j;
    if (spec.contains("spf_poles")) {
      rq::SimplePartialFraction rho = rq::spf_from_json(spec);
      if (alpha > 0.0) {
        rq::SpfSemiaxisReport rep = rq::spf_semiaxis_bound(rho, alpha, m);
        j["sup"] = rep.sup;
        j["S"] = rep.S;
        j["norm_2m"] = rep.norm2m;
        j["sup_vs_S"] = rq::bound_to_json(rep.sup_vs_S);
        j["S_vs_rhs"] = rq::bound_to_json(rep.S_vs_rhs);
        std::printf("%s\n", rq::dump_json17(j).c_str());
        return rep.sup_vs_S.holds && rep.S_vs_rhs.holds ? 0 : 1;
      }
      if (q_str != "inf" || bound->count("--q") > 0) {
        rq::BoundReport rep = rq::spf_mixed_bound(rho, pw, parse_q(q_str));
        j = rq::bound_to_json(rep);
        std::printf("%s\n", rq::dump_json17(j).c_str());
        return rep.holds ? 0 : 1;
      }
      rq::SpfBounds b = rq::spf_bounds(rho, pw);
      j["d"] = b.d;
      j["sup"] = b.sup;
      j["norm_p_p"] = b.norm_p_p;
      j["upper"] = rq::bound_to_json(b.upper);
      j["lower"] = rq::bound_to_json(b.lower);
      std::printf("%s\n", rq::dump_json17(j).c_str());
      return b.upper.holds && b.lower.holds ? 0 : 1;
    }
    rq::RationalFunction R = rq::rational_from_json(spec);
    rq::QuadTarget t = rq::make_target(R);
    rq::BoundReport rep;
    switch (d) {
      case Domain::Circle:
        if (!has_theta) rq::fail(rq::Errc::BadParams, "circle bound needs --theta");
        rep = rq::pointwise_circle(t, r, m, theta);
        break;
      case Domain::Axis:
        if (!has_x) rq::fail(rq::Errc::BadParams, "axis bound needs --x");
        rep = rq::pointwise_axis(t, m, x);
        break;
      case Domain::Semiaxis:
        if (!has_x) rq::fail(rq::Errc::BadParams, "semiaxis bound needs --x");
        rep = rq::pointwise_semiaxis(t, m, x);
        break;
      case Domain::Segment:
        if (!has_theta) rq::fail(rq::Errc::BadParams, "segment bound needs --theta");
        rep = rq::pointwise_segment(t, m, theta);
        break;
    }
    std::printf("%s\n", rq::dump_json17(rq::bound_to_json(rep)).c_str());
    return rep.holds ? 0 : 1;
  }

  if (*extremal) {
    rq::WitnessKind kind = rq::witness_kind_from_name(kind_str);
    rq::WitnessParams params;
    params.p = p;
    params.n = n;
    params.delta = delta;
    params.r = r;
    if (has_position) params.position = position;
    if (!spec_path.empty()) {
      rq::RationalFunction R = rq::rational_from_json(load_json(spec_path));
      const Domain d = kind == rq::WitnessKind::AxisStar ? Domain::Axis : Domain::Circle;
      params.pole_set = domain_pole_set(R, d, r);
    }
    rq::Witness w = rq::extremal_witness(kind, params);
    Json j;
    j["kind"] = rq::witness_kind_name(kind);
    auto equality = [](double lhs, double rhs) {
      Json e;
      e["lhs"] = lhs;
      e["rhs"] = rhs;
      e["equality"] = std::abs(lhs - rhs) <= 1e-8 * std::max(std::abs(rhs), 1e-30);
      return e;
    };
    switch (kind) {
      case rq::WitnessKind::RhoP: {
        j["p"] = w.p;
        j["y0"] = w.y0;
        j["pole"] = Json::array({0.0, w.y0});
        rq::SimplePartialFraction rho{{Complex(0.0, w.y0)}};
        rq::SpfBounds b = rq::spf_bounds(rho, w.p);
        j["d"] = b.d;
        j["sharpness"] = equality(b.d, 2.0 * rq::m_p(w.p));
        break;
      }
      case rq::WitnessKind::CircleStar:
      case rq::WitnessKind::CircleDeltaStar: {
        j["phi"] = w.phi;
        j["node"] = Json::array({w.node.real(), w.node.imag()});
        const double norm2 = rq::norm_circle_2m(w.target, w.radius, 1, 0.9).real();
        const double sup = rq::sup_circle(w.target, w.radius);
        if (kind == rq::WitnessKind::CircleDeltaStar) {
          j["n"] = w.n;
          j["delta"] = w.delta;
          const double c =
              rq::nikolskii_constant_geometric(Domain::Circle, 2.0, kInf, w.n, w.delta, w.radius);
          j["sharpness"] = equality(sup, c * std::sqrt(norm2));
        } else {
          rq::PoleSet ps = *params.pole_set;
          const double musup = rq::mu_sup({ps, Domain::Circle, w.radius});
          j["mu_sup"] = musup;
          j["sharpness"] =
              equality(norm2, 2.0 * kPi * w.radius * sup * sup / (musup + 1.0));
        }
        break;
      }
      case rq::WitnessKind::AxisStar: {
        j["phi"] = w.phi;
        j["node"] = Json::array({w.node.real(), w.node.imag()});
        const double norm2 = rq::norm_axis_2m(w.target, 1, 0.9).real();
        const double sup = rq::sup_axis(w.target);
        const double musup = rq::mu_sup({*params.pole_set, Domain::Axis, 1.0});
        j["mu_sup"] = musup;
        j["sharpness"] = equality(norm2, kPi * sup * sup / musup);
        break;
      }
      case rq::WitnessKind::SegmentJacobi: {
        j["n"] = w.n;
        Json coeffs = Json::array();
        for (const auto& c : w.rational->numerator) coeffs.push_back(c.real());
        j["coeffs"] = coeffs;
        const double at1 = std::abs(rq::eval(*w.rational, Complex(1.0, 0.0)));
        j["value_at_1"] = at1;
        const double norm2 = std::sqrt(rq::norm_segment_2m(w.target, 1, 0.9).real());
        j["sharpness"] = equality(rq::sup_segment(w.target),
                                  std::sqrt((2.0 * w.n + 1.0) / kPi) * norm2);
        break;
      }
      case rq::WitnessKind::TrigStar: {
        j["n"] = w.n;
        const double sup = rq::sup_circle(w.target, 1.0);
        const double norm2 = std::sqrt(rq::norm_circle_2m(w.target, 1.0, 1, 0.9).real());
        j["sharpness"] = equality(sup, rq::trig_constant(2.0, kInf, w.n) * norm2);
        break;
      }
    }
    std::printf("%s\n", rq::dump_json17(j).c_str());
    return 0;
  }

  if (*suite) {
    auto results = rq::run_acceptance(seed);
    Json j;
    j["seed"] = seed;
    j["criteria"] = Json::array();
    bool all = true;
    for (const auto& c : results) {
      Json cj;
      cj["id"] = c.id;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      j["criteria"].push_back(cj);
      all = all && c.pass;
    }
    j["all_pass"] = all;
    std::printf("%s\n", rq::dump_json17(j).c_str());
    return all ? 0 : 1;
  }

  if (*parse) {
    Json j = load_json(from_json_path);
    Json out;
    out["ok"] = true;
    out["type"] = rq::validate_known_json(j);
    std::printf("%s\n", rq::dump_json17(out).c_str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rq::Error& e) {
    Json err;
    err["error"] = rq::errc_name(e.code());
    err["message"] = e.what();
    std::fprintf(stderr, "%s\n", rq::dump_json17(err).c_str());
    return e.code() == rq::Errc::ConvergenceFailure ? 3 : 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "BadInput";
    err["message"] = e.what();
    std::fprintf(stderr, "%s\n", rq::dump_json17(err).c_str());
    return 2;
  }
}
