#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratquad {

using Complex = std::complex<double>;

// Pole-merge tolerance, absolute but scaled by max(1,|z|): reflected images of
// numerically conjugate pairs must land on the same entry.
inline constexpr double kMergeTol = 1e-10;
// Relative pole-to-contour tolerance. A pole this close to the integration
// contour makes mu blow up like dist^-2, so it is an input error.
inline constexpr double kContourTol = 1e-8;
// Relative tolerance for detecting evaluation at a pole.
inline constexpr double kPoleEvalTol = 1e-12;

enum class Errc {
  BadInput,
  EvalAtPole,
  PoleOnContour,
  NotProper,
  PoleOnSemiaxis,
  PoleOnSegment,
  DivergentIntegral,
  PolesOnBothSides,
  PolesOutsideBeam,
  BadGeometry,
  BadKind,
  BadParams,
  OffContour,
  PoleSetEmpty,
  ConvergenceFailure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

/// A point of the extended complex plane. When at_infinity is set the
/// coordinates are ignored and the point compares equal only to other
/// infinity points.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;
  bool at_infinity = false;

  ComplexPoint() = default;
  ComplexPoint(double re_, double im_) : re(re_), im(im_) {}
  explicit ComplexPoint(Complex z) : re(z.real()), im(z.imag()) {}

  static ComplexPoint infinity() {
    ComplexPoint p;
    p.at_infinity = true;
    return p;
  }

  Complex value() const;  // BadInput if at_infinity

  bool operator==(const ComplexPoint& o) const {
    if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
    return re == o.re && im == o.im;
  }
};

struct Pole {
  Complex location;
  int multiplicity = 1;
};

enum class Region { Disc, UpperHalfPlane, UnitDisc };

enum class Domain { Circle, Axis, Semiaxis, Segment };

const char* domain_name(Domain d);

/// Symmetrized/reflected pole list confined to a disc or half-plane, with the
/// total multiplicity pinned to the degree budget of the source theorem.
struct PoleSet {
  std::vector<Pole> entries;
  int total = 0;  // sum of multiplicities
  Region region = Region::Disc;
  double radius = 1.0;  // for Disc; UnitDisc implies 1
};

/// P(z) / prod_k (z - z_k)^{n_k}. The denominator is never expanded; all
/// downstream formulas consume pole locations, not coefficients. A pole at
/// infinity of multiplicity deg P - sum n_k is implied when deg P exceeds the
/// finite pole budget.
struct RationalFunction {
  std::vector<Complex> numerator;  // ascending powers, trailing zeros trimmed
  std::vector<Pole> poles;         // finite, pairwise distinct

  int numerator_degree() const { return static_cast<int>(numerator.size()) - 1; }
  int pole_degree() const;
  int degree() const;                    // max(deg P, sum multiplicities)
  int infinity_multiplicity() const;     // deg P - sum n_k when positive
  bool proper() const { return numerator_degree() < pole_degree(); }
};

/// Validating factory: trims trailing zeros, rejects empty/zero numerators,
/// non-positive multiplicities and coincident pole locations.
RationalFunction make_rational(std::vector<Complex> numerator, std::vector<Pole> poles);

Complex eval(const RationalFunction& R, Complex z);

/// rho_n(z) = sum_k 1/(z - z_k); repetitions allowed.
struct SimplePartialFraction {
  std::vector<Complex> poles;
  int degree() const { return static_cast<int>(poles.size()); }
};

Complex eval(const SimplePartialFraction& s, Complex z);

RationalFunction spf_to_rational(const SimplePartialFraction& s);

// Pole symmetrization maps. Each returns the in-region pole set of the
// squared-modulus function the corresponding quadrature theorem works with,
// with total multiplicity equal to that theorem's budget.
PoleSet reflect_circle(const std::vector<Pole>& poles, int num_degree, double r);
PoleSet reflect_axis(const std::vector<Pole>& poles, int num_degree);
PoleSet semiaxis_lift(const std::vector<Pole>& poles, int num_degree);
PoleSet segment_lift(const std::vector<Pole>& poles, int num_degree);

PoleSet reflect_circle(const RationalFunction& R, double r);
PoleSet reflect_axis(const RationalFunction& R);
PoleSet semiaxis_lift(const RationalFunction& R);
PoleSet segment_lift(const RationalFunction& R);

/// Distance from z to the segment [-1,1].
double segment_distance(Complex z);

/// Merge poles whose locations coincide within kMergeTol (scaled); merged
/// location is the multiplicity-weighted mean.
std::vector<Pole> merge_poles(const std::vector<Pole>& raw);

/// Integer power by repeated squaring; keeps |z^n| = |z|^n tight for
/// unimodular bases.
Complex pow_int(Complex z, long n);

}  // namespace ratquad
