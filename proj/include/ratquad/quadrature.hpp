#pragma once

#include <functional>

#include "ratquad/notches.hpp"
#include "ratquad/ratfun.hpp"

namespace ratquad {

/// What the quadrature engines need of an integrand: its finite poles with
/// multiplicities, the numerator degree (for the implied pole at infinity and
/// degree-gap bookkeeping), the leading behaviour at infinity, and a way to
/// evaluate it. A RationalFunction provides all of this; the extremal
/// witnesses provide quotient-form evaluators with the same pole data.
struct QuadTarget {
  std::vector<Pole> poles;
  int num_degree = 0;
  Complex leading{0.0, 0.0};  // lim z^gap * f(z) for proper f (axis engines)
  std::function<Complex(Complex)> f;

  int pole_degree() const;
  int degree() const { return std::max(num_degree, pole_degree()); }
  int gap() const { return pole_degree() - num_degree; }
  bool proper() const { return gap() > 0; }
};

QuadTarget make_target(const RationalFunction& R);

/// Value of one of the exact quadrature identities together with its
/// per-node terms. value == sum(contributions) by construction (compensated
/// summation in node order); in norm mode every contribution is >= 0 and the
/// value is real.
struct QuadratureResult {
  Complex value{0.0, 0.0};
  std::vector<Complex> contributions;
  bool dropped_inf = false;  // an infinite axis notch was present
  Domain domain = Domain::Circle;
  int m = 1;
  double phi = 0.0;
  bool norm_mode = false;

  double real() const { return value.real(); }
};

enum class SemiaxisWeight { InvSqrt, Sqrt };

// Circle |z| = r:  int_{gamma_r} f |dzeta|  and  ||f||_{2m}^{2m}.
QuadratureResult integrate_circle(const QuadTarget& t, double r, double phi);
QuadratureResult norm_circle_2m(const QuadTarget& t, double r, int m, double phi);

// Real axis:  int_R f^m dx  and  ||f||_{2m}^{2m}. f proper; the m = 1
// integral additionally needs degree gap >= 2 for absolute convergence.
QuadratureResult integrate_axis(const QuadTarget& t, int m, double phi);
QuadratureResult norm_axis_2m(const QuadTarget& t, int m, double phi);

// Semiaxis with weight x^{-1/2} or x^{+1/2}:  int_0^inf f^m w dx  and
// ||f||_{2m}^{2m} with the weight. The sqrt-weight integral needs m*gap >= 2.
QuadratureResult integrate_semiaxis(const QuadTarget& t, int m, double phi, SemiaxisWeight w);
QuadratureResult norm_semiaxis_2m(const QuadTarget& t, int m, double phi, SemiaxisWeight w);

// Segment [-1,1] with the Chebyshev weight (1-x^2)^{-1/2}.
QuadratureResult integrate_segment(const QuadTarget& t, double phi);
QuadratureResult norm_segment_2m(const QuadTarget& t, int m, double phi);

// RationalFunction conveniences.
QuadratureResult integrate_circle(const RationalFunction& R, double r, double phi);
QuadratureResult norm_circle_2m(const RationalFunction& R, double r, int m, double phi);
QuadratureResult integrate_axis(const RationalFunction& R, int m, double phi);
QuadratureResult norm_axis_2m(const RationalFunction& R, int m, double phi);
QuadratureResult integrate_semiaxis(const RationalFunction& R, int m, double phi, SemiaxisWeight w);
QuadratureResult norm_semiaxis_2m(const RationalFunction& R, int m, double phi, SemiaxisWeight w);
QuadratureResult integrate_segment(const RationalFunction& R, double phi);
QuadratureResult norm_segment_2m(const RationalFunction& R, int m, double phi);

}  // namespace ratquad
