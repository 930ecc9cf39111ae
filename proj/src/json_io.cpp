#include "ratquad/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace ratquad {

namespace {

void dump17_impl(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump17_impl(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump17_impl(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      char buf[40];
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      } else {
        out += "null";  // JSON has no inf/nan; emitters avoid them
      }
      break;
    }
    default: out += j.dump(); break;
  }
}

Complex complex_from_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(Errc::BadInput, "expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json pair_from_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

std::string dump_json17(const Json& j) {
  std::string out;
  dump17_impl(j, out);
  return out;
}

Json rational_to_json(const RationalFunction& R) {
  Json j;
  j["numerator"] = Json::array();
  for (const auto& c : R.numerator) j["numerator"].push_back(pair_from_complex(c));
  j["poles"] = Json::array();
  for (const auto& p : R.poles) {
    Json pj;
    pj["re"] = p.location.real();
    pj["im"] = p.location.imag();
    pj["mult"] = p.multiplicity;
    j["poles"].push_back(pj);
  }
  return j;
}

RationalFunction rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j["numerator"].is_array())
    fail(Errc::BadInput, "rational spec needs a \"numerator\" array");
  std::vector<Complex> num;
  for (const auto& c : j["numerator"]) num.push_back(complex_from_pair(c));
  std::vector<Pole> poles;
  if (j.contains("poles")) {
    if (!j["poles"].is_array()) fail(Errc::BadInput, "\"poles\" must be an array");
    for (const auto& pj : j["poles"]) {
      if (!pj.is_object() || !pj.contains("re") || !pj.contains("im") || !pj.contains("mult"))
        fail(Errc::BadInput, "pole entries need re, im, mult");
      if (!pj["mult"].is_number_integer() || pj["mult"].get<int>() < 1)
        fail(Errc::BadInput, "pole multiplicity must be a positive integer");
      poles.push_back({{pj["re"].get<double>(), pj["im"].get<double>()}, pj["mult"].get<int>()});
    }
  }
  return make_rational(std::move(num), std::move(poles));
}

Json spf_to_json(const SimplePartialFraction& s) {
  Json j;
  j["spf_poles"] = Json::array();
  for (const auto& z : s.poles) j["spf_poles"].push_back(pair_from_complex(z));
  return j;
}

SimplePartialFraction spf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("spf_poles") || !j["spf_poles"].is_array())
    fail(Errc::BadInput, "SPF spec needs an \"spf_poles\" array");
  SimplePartialFraction s;
  for (const auto& c : j["spf_poles"]) s.poles.push_back(complex_from_pair(c));
  if (s.poles.empty()) fail(Errc::BadInput, "SPF must have at least one pole");
  return s;
}

Json notchset_to_json(const NotchSet& ns) {
  Json j;
  j["domain"] = domain_name(ns.domain);
  j["phi"] = ns.phi;
  j["m"] = ns.m;
  j["nodes"] = Json::array();
  const bool circle_like = ns.domain == Domain::Circle || ns.domain == Domain::Segment;
  for (size_t k = 0; k < ns.nodes.size(); ++k) {
    Json nj;
    if (ns.nodes[k].at_infinity)
      nj["inf"] = true;
    else if (circle_like)
      nj["theta"] = ns.params[k];
    else
      nj["x"] = ns.params[k];
    j["nodes"].push_back(nj);
  }
  j["mu"] = ns.mu;
  j["residual"] = ns.residuals;
  if (ns.domain == Domain::Segment) j["x_proj"] = ns.x_proj;
  return j;
}

Json quadrature_to_json(const QuadratureResult& q) {
  Json j;
  if (q.norm_mode) {
    j["value"] = q.value.real();
    Json c = Json::array();
    for (const auto& z : q.contributions) c.push_back(z.real());
    j["contributions"] = c;
  } else {
    j["value"] = pair_from_complex(q.value);
    Json c = Json::array();
    for (const auto& z : q.contributions) c.push_back(pair_from_complex(z));
    j["contributions"] = c;
  }
  j["dropped_inf"] = q.dropped_inf;
  j["phi"] = q.phi;
  j["m"] = q.m;
  return j;
}

Json bound_to_json(const BoundReport& b) {
  Json j;
  j["lhs"] = b.lhs;
  j["rhs"] = b.rhs;
  j["ratio"] = b.ratio;
  j["holds"] = b.holds;
  j["sharp_gap"] = b.sharp_gap;
  return j;
}

std::string validate_known_json(const Json& j) {
  if (!j.is_object()) fail(Errc::BadInput, "expected a JSON object");
  if (j.contains("numerator")) {
    rational_from_json(j);
    return "rational";
  }
  if (j.contains("spf_poles")) {
    spf_from_json(j);
    return "spf";
  }
  if (j.contains("nodes") && j.contains("mu") && j.contains("residual")) {
    if (!j["nodes"].is_array() || !j["mu"].is_array() || !j["residual"].is_array())
      fail(Errc::BadInput, "malformed notch set");
    for (const auto& nj : j["nodes"])
      if (!nj.contains("theta") && !nj.contains("x") && !nj.contains("inf"))
        fail(Errc::BadInput, "notch entries need theta, x, or inf");
    return "notchset";
  }
  if (j.contains("value") && j.contains("contributions")) return "quadrature";
  if (j.contains("lhs") && j.contains("rhs")) return "bound";
  if (j.contains("upper") && j.contains("lower") && j.contains("d")) return "spf_bound";
  if (j.contains("sup_vs_S") && j.contains("S_vs_rhs")) return "spf_semiaxis_bound";
  if (j.contains("criteria")) return "suite";
  if (j.contains("kind")) return "witness";
  if (j.contains("constant") || j.contains("ours")) return "constant";
  fail(Errc::BadInput, "unrecognized JSON document");
}

}  // namespace ratquad
