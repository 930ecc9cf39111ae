#include "ratquad/ratfun.hpp"

#include <algorithm>
#include <cmath>

namespace ratquad {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadInput: return "BadInput";
    case Errc::EvalAtPole: return "EvalAtPole";
    case Errc::PoleOnContour: return "PoleOnContour";
    case Errc::NotProper: return "NotProper";
    case Errc::PoleOnSemiaxis: return "PoleOnSemiaxis";
    case Errc::PoleOnSegment: return "PoleOnSegment";
    case Errc::DivergentIntegral: return "DivergentIntegral";
    case Errc::PolesOnBothSides: return "PolesOnBothSides";
    case Errc::PolesOutsideBeam: return "PolesOutsideBeam";
    case Errc::BadGeometry: return "BadGeometry";
    case Errc::BadKind: return "BadKind";
    case Errc::BadParams: return "BadParams";
    case Errc::OffContour: return "OffContour";
    case Errc::PoleSetEmpty: return "PoleSetEmpty";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
  }
  return "Unknown";
}

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Circle: return "circle";
    case Domain::Axis: return "axis";
    case Domain::Semiaxis: return "semiaxis";
    case Domain::Segment: return "segment";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

Complex ComplexPoint::value() const {
  if (at_infinity) fail(Errc::BadInput, "finite value of the point at infinity requested");
  return {re, im};
}

Complex pow_int(Complex z, long n) {
  if (n < 0) return 1.0 / pow_int(z, -n);
  Complex acc = 1.0;
  Complex base = z;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

int RationalFunction::pole_degree() const {
  int s = 0;
  for (const auto& p : poles) s += p.multiplicity;
  return s;
}

int RationalFunction::degree() const { return std::max(numerator_degree(), pole_degree()); }

int RationalFunction::infinity_multiplicity() const {
  return std::max(0, numerator_degree() - pole_degree());
}

RationalFunction make_rational(std::vector<Complex> numerator, std::vector<Pole> poles) {
  if (numerator.empty()) fail(Errc::BadInput, "numerator is identically zero");
  while (numerator.size() > 1 && std::abs(numerator.back()) == 0.0) numerator.pop_back();
  if (numerator.size() == 1 && std::abs(numerator[0]) == 0.0)
    fail(Errc::BadInput, "numerator is identically zero");
  for (const auto& p : poles) {
    if (p.multiplicity < 1) fail(Errc::BadInput, "pole multiplicity must be >= 1");
    if (!std::isfinite(p.location.real()) || !std::isfinite(p.location.imag()))
      fail(Errc::BadInput, "pole location must be finite");
  }
  for (size_t i = 0; i < poles.size(); ++i)
    for (size_t j = i + 1; j < poles.size(); ++j) {
      double scale = std::max(1.0, std::abs(poles[i].location));
      if (std::abs(poles[i].location - poles[j].location) < kMergeTol * scale)
        fail(Errc::BadInput, "pole locations must be pairwise distinct");
    }
  RationalFunction R;
  R.numerator = std::move(numerator);
  R.poles = std::move(poles);
  return R;
}

Complex eval(const RationalFunction& R, Complex z) {
  for (const auto& p : R.poles) {
    double scale = std::max(1.0, std::abs(p.location));
    if (std::abs(z - p.location) < kPoleEvalTol * scale)
      fail(Errc::EvalAtPole, "evaluation point coincides with a pole");
  }
  Complex num = 0.0;
  for (size_t i = R.numerator.size(); i-- > 0;) num = num * z + R.numerator[i];
  Complex den = 1.0;
  for (const auto& p : R.poles) den *= pow_int(z - p.location, p.multiplicity);
  return num / den;
}

Complex eval(const SimplePartialFraction& s, Complex z) {
  Complex acc = 0.0;
  for (const auto& zk : s.poles) {
    if (std::abs(z - zk) < kPoleEvalTol * std::max(1.0, std::abs(zk)))
      fail(Errc::EvalAtPole, "evaluation point coincides with an SPF pole");
    acc += 1.0 / (z - zk);
  }
  return acc;
}

std::vector<Pole> merge_poles(const std::vector<Pole>& raw) {
  std::vector<Pole> out;
  std::vector<Complex> weighted;  // location * accumulated multiplicity
  for (const auto& p : raw) {
    bool merged = false;
    for (size_t i = 0; i < out.size(); ++i) {
      double scale = std::max(1.0, std::abs(out[i].location));
      if (std::abs(p.location - out[i].location) < kMergeTol * scale) {
        weighted[i] += p.location * static_cast<double>(p.multiplicity);
        out[i].multiplicity += p.multiplicity;
        out[i].location = weighted[i] / static_cast<double>(out[i].multiplicity);
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.push_back(p);
      weighted.push_back(p.location * static_cast<double>(p.multiplicity));
    }
  }
  return out;
}

RationalFunction spf_to_rational(const SimplePartialFraction& s) {
  if (s.poles.empty()) fail(Errc::BadInput, "empty simple partial fraction");
  std::vector<Pole> raw;
  raw.reserve(s.poles.size());
  for (const auto& z : s.poles) raw.push_back({z, 1});
  std::vector<Pole> merged = merge_poles(raw);
  // numerator = sum_j c_j * prod_{i != j} (z - w_i); c_j counts repetitions
  size_t nu = merged.size();
  std::vector<Complex> num(nu, 0.0);
  for (size_t j = 0; j < nu; ++j) {
    std::vector<Complex> prod{1.0};
    for (size_t i = 0; i < nu; ++i) {
      if (i == j) continue;
      std::vector<Complex> next(prod.size() + 1, 0.0);
      for (size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] -= prod[k] * merged[i].location;
      }
      prod = std::move(next);
    }
    double cj = static_cast<double>(merged[j].multiplicity);
    for (size_t k = 0; k < prod.size(); ++k) num[k] += cj * prod[k];
  }
  std::vector<Pole> poles;
  poles.reserve(nu);
  for (auto& p : merged) poles.push_back({p.location, 1});
  return make_rational(std::move(num), std::move(poles));
}

double segment_distance(Complex z) {
  double x = z.real(), y = z.imag();
  if (x > 1.0) return std::abs(z - Complex(1.0, 0.0));
  if (x < -1.0) return std::abs(z + Complex(1.0, 0.0));
  return std::abs(y);
}

namespace {

double semiaxis_distance(Complex z) {
  if (z.real() >= 0.0) return std::abs(z.imag());
  return std::abs(z);
}

PoleSet finish(std::vector<Pole> entries, Region region, double radius, int budget,
               const char* what) {
  PoleSet ps;
  ps.entries = merge_poles(entries);
  ps.region = region;
  ps.radius = radius;
  ps.total = 0;
  for (const auto& p : ps.entries) ps.total += p.multiplicity;
  if (ps.total != budget) fail(Errc::ConvergenceFailure, std::string(what) + ": multiplicity budget mismatch");
  return ps;
}

}  // namespace

PoleSet reflect_circle(const std::vector<Pole>& poles, int num_degree, double r) {
  if (!(r > 0.0)) fail(Errc::BadParams, "radius must be positive");
  int pole_deg = 0;
  for (const auto& p : poles) pole_deg += p.multiplicity;
  std::vector<Pole> entries;
  for (const auto& p : poles) {
    double a = std::abs(p.location);
    if (std::abs(a - r) < kContourTol * r)
      fail(Errc::PoleOnContour, "pole on the circle of integration");
    if (a < r)
      entries.push_back(p);
    else
      entries.push_back({r * r / std::conj(p.location), p.multiplicity});
  }
  int d_inf = std::max(0, num_degree - pole_deg);
  if (d_inf > 0) entries.push_back({Complex(0.0, 0.0), d_inf});
  int budget = std::max(num_degree, pole_deg);
  return finish(std::move(entries), Region::Disc, r, budget, "reflect_circle");
}

PoleSet reflect_axis(const std::vector<Pole>& poles, int num_degree) {
  int pole_deg = 0;
  for (const auto& p : poles) pole_deg += p.multiplicity;
  if (num_degree >= pole_deg) fail(Errc::NotProper, "axis reflection requires a proper fraction");
  std::vector<Pole> entries;
  for (const auto& p : poles) {
    double scale = std::max(1.0, std::abs(p.location));
    if (std::abs(p.location.imag()) < kContourTol * scale)
      fail(Errc::PoleOnContour, "pole on the real axis");
    if (p.location.imag() > 0.0)
      entries.push_back(p);
    else
      entries.push_back({std::conj(p.location), p.multiplicity});
  }
  return finish(std::move(entries), Region::UpperHalfPlane, 1.0, pole_deg, "reflect_axis");
}

PoleSet semiaxis_lift(const std::vector<Pole>& poles, int num_degree) {
  int pole_deg = 0;
  for (const auto& p : poles) pole_deg += p.multiplicity;
  if (num_degree >= pole_deg) fail(Errc::NotProper, "semiaxis lift requires a proper fraction");
  std::vector<Pole> entries;
  for (const auto& p : poles) {
    double scale = std::max(1.0, std::abs(p.location));
    if (semiaxis_distance(p.location) < kContourTol * scale)
      fail(Errc::PoleOnSemiaxis, "pole on the positive semiaxis");
    // z = sqrt(r) e^{i phi/2} with phi in (0, 2pi): principal sqrt flipped into
    // the upper half-plane.
    Complex s = std::sqrt(p.location);
    if (s.imag() < 0.0) s = -s;
    entries.push_back({s, p.multiplicity});
    entries.push_back({-std::conj(s), p.multiplicity});
  }
  return finish(std::move(entries), Region::UpperHalfPlane, 1.0, 2 * pole_deg, "semiaxis_lift");
}

PoleSet segment_lift(const std::vector<Pole>& poles, int num_degree) {
  int pole_deg = 0;
  for (const auto& p : poles) pole_deg += p.multiplicity;
  std::vector<Pole> entries;
  for (const auto& p : poles) {
    double scale = std::max(1.0, std::abs(p.location));
    if (segment_distance(p.location) < kContourTol * scale)
      fail(Errc::PoleOnSegment, "pole on the segment [-1,1]");
    Complex w = p.location;
    Complex s = std::sqrt(w * w - 1.0);
    // sign-match the root so w + s is the root of larger modulus, then take
    // the in-disc root as its reciprocal (the product of the two roots is 1)
    if (w.real() * s.real() + w.imag() * s.imag() < 0.0) s = -s;
    Complex big = w + s;
    Complex small = 1.0 / big;
    if (std::abs(std::abs(small) - 1.0) < kContourTol)
      fail(Errc::PoleOnSegment, "pole effectively on the segment [-1,1]");
    entries.push_back({small, p.multiplicity});
    entries.push_back({std::conj(small), p.multiplicity});
  }
  int d_inf = std::max(0, num_degree - pole_deg);
  if (d_inf > 0) entries.push_back({Complex(0.0, 0.0), 2 * d_inf});
  int budget = 2 * std::max(num_degree, pole_deg);
  return finish(std::move(entries), Region::UnitDisc, 1.0, budget, "segment_lift");
}

PoleSet reflect_circle(const RationalFunction& R, double r) {
  return reflect_circle(R.poles, R.numerator_degree(), r);
}
PoleSet reflect_axis(const RationalFunction& R) {
  return reflect_axis(R.poles, R.numerator_degree());
}
PoleSet semiaxis_lift(const RationalFunction& R) {
  return semiaxis_lift(R.poles, R.numerator_degree());
}
PoleSet segment_lift(const RationalFunction& R) {
  return segment_lift(R.poles, R.numerator_degree());
}

}  // namespace ratquad
