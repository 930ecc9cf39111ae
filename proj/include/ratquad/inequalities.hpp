#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratquad/blaschke.hpp"
#include "ratquad/quadrature.hpp"
#include "ratquad/ratfun.hpp"

namespace ratquad {

/// One verified inequality: left side, right side, and whether lhs <= rhs
/// within a 1e-10 relative slack.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;      // lhs / rhs
  bool holds = false;      // lhs <= rhs * (1 + 1e-10)
  double sharp_gap = 0.0;  // rhs - lhs
};

BoundReport make_report(double lhs, double rhs);

/// The unique integer in [p/2, 1 + p/2): selects which even-power quadrature
/// identity underlies an L^p bound.
int m_p(double p);

/// Euler beta function via gamma; relative error well below 1e-13 in the
/// parameter range used here.
double beta_function(double a, double b);

/// Pole height of the unit-L^p-norm single-pole fraction 1/(z - i y0(p)).
double rho_pole_height(double p);

/// Norm of the Hilbert transform on L^p.
double hilbert_norm(double p);

// ---- L^p norms and sup norms -------------------------------------------------

/// ||f||_p^p over the domain (Chebyshev/semiaxis weights included). Uses the
/// exact quadrature identity when p is an even integer, the oracle otherwise.
double lp_norm_p(Domain d, const QuadTarget& t, double p, double r = 1.0);

double sup_circle(const QuadTarget& t, double r);
double sup_axis(const QuadTarget& t);
double sup_semiaxis(const QuadTarget& t);  // over x >= 0
double sup_segment(const QuadTarget& t);

// ---- pointwise Jackson-Nikolskii bounds -------------------------------------

BoundReport pointwise_circle(const QuadTarget& t, double r, int m, double theta);
BoundReport pointwise_axis(const QuadTarget& t, int m, double x);
BoundReport pointwise_semiaxis(const QuadTarget& t, int m, double x);
BoundReport pointwise_segment(const QuadTarget& t, int m, double theta);

// ---- (q,p) constants ---------------------------------------------------------

/// mu-exact constant from the actual weight supremum.
double nikolskii_constant_mu(Domain d, double mu_sup_value, double p, double q, double r = 1.0);
/// Closed-form geometric constant: annulus (circle, 0<delta<1), stripe
/// (axis, delta>0), parabola (semiaxis, delta>0), ellipse (segment, delta>1).
double nikolskii_constant_geometric(Domain d, double p, double q, int n, double delta,
                                    double r = 1.0);
/// Comparison constant of the annulus inequality from the literature.
double baranov_constant(double p, double q, int n, double delta, double r = 1.0);
double polynomial_constant_segment(double p, double q, int n);
double laurent_constant_circle(double p, double q, int n1, int n2, double r = 1.0);
double trig_constant(double p, double q, int n);  // for T_{n+1,n}

// ---- alternatives ------------------------------------------------------------

struct AlternativeReport {
  double lhs1 = 0.0, rhs1 = 0.0;  // |R|^d vs weight expression
  double lhs2 = 0.0, rhs2 = 0.0;  // |R|^{2m-d} vs norm expression
  bool first = false;             // strict
  bool second = false;
};

AlternativeReport alternative_circle(const QuadTarget& t, double r, int m, double d, double theta);
AlternativeReport alternative_axis(const QuadTarget& t, int m, double d, double x);

// ---- simple partial fractions ------------------------------------------------

/// d(rho; p) = 2 pi ||rho||_inf^{p-1} / ||rho||_p^p together with the upper
/// bound 2 m_p and the one-sided lower bound.
struct SpfBounds {
  double d = 0.0;
  double sup = 0.0;
  double norm_p_p = 0.0;
  BoundReport upper;  // d <= 2 m_p
  BoundReport lower;  // lower bound <= d
};
SpfBounds spf_bounds(const SimplePartialFraction& rho, double p);

/// D(rho; p) = (d / 2 pi)^{p'/p} = ||rho||_inf / ||rho||_p^{p'}.
double spf_capital_d(const SimplePartialFraction& rho, double p);

BoundReport spf_mixed_bound(const SimplePartialFraction& rho, double p, double q);

struct SpfSemiaxisReport {
  double sup = 0.0;     // ||rho||_{L^inf(R+)}
  double S = 0.0;       // sum 1/r_k
  double norm2m = 0.0;  // ||rho||_{2m, weight 1/sqrt(x)}^{2m}
  BoundReport sup_vs_S;
  BoundReport S_vs_rhs;
};
SpfSemiaxisReport spf_semiaxis_bound(const SimplePartialFraction& rho, double alpha, int m);

struct SigmaTriple {
  double sigma = 0.0;   // p sin^{-p'}(pi/p), p > 1
  double sigma1 = 0.0;  // (1/(2 pi n))^{1/(p-1)}, p >= 2
  double sigma2 = 0.0;  // ((p+2)/(2 pi))^{1/(p-1)}, p >= 2
};
SigmaTriple sigma_comparison(double p, int n);

// ---- extremal witnesses ------------------------------------------------------

enum class WitnessKind { CircleStar, CircleDeltaStar, AxisStar, RhoP, SegmentJacobi, TrigStar };

WitnessKind witness_kind_from_name(const std::string& name);
const char* witness_kind_name(WitnessKind k);

struct WitnessParams {
  double p = 0.0;                     // RhoP
  int n = 0;                          // CircleDeltaStar / SegmentJacobi / TrigStar
  double delta = 0.0;                 // CircleDeltaStar
  double r = 1.0;                     // circle kinds
  std::optional<PoleSet> pole_set;    // CircleStar / AxisStar
  std::optional<double> position;     // prescribed node: theta / x (default: argmax mu)
};

/// An evaluable extremal function. Quotient-form witnesses switch to a
/// first-order expansion within 1e-6 of the removed notch zero.
struct Witness {
  WitnessKind kind = WitnessKind::RhoP;
  Domain domain = Domain::Axis;
  double radius = 1.0;
  double phi = 0.0;       // construction parameter for the star witnesses
  Complex node{0.0, 0.0}; // contour point where the bound is attained
  QuadTarget target;
  std::optional<RationalFunction> rational;
  double y0 = 0.0;
  int n = 0;
  double delta = 0.0;
  double p = 0.0;
};

Witness extremal_witness(WitnessKind kind, const WitnessParams& params);

/// All equality scenarios the theory pins down, each checked to 1e-8
/// relative.
struct SharpnessItem {
  std::string name;
  BoundReport report;
  bool equality = false;  // |lhs - rhs| <= 1e-8 * rhs
};
std::vector<SharpnessItem> sharpness_suite();

}  // namespace ratquad
