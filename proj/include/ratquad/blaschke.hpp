#pragma once

#include <functional>

#include "ratquad/ratfun.hpp"

namespace ratquad {

/// B(z) = prod_k ( r (z - z_k) / (r^2 - z conj(z_k)) )^{n_k}, unimodular on
/// the circle |z| = r when the pole set lies strictly inside it.
struct BlaschkeCircle {
  PoleSet pole_set;
  double radius = 1.0;
};

/// B_*(x) = prod_k ( (x - z_k) / (x - conj(z_k)) )^{n_k}, unimodular on the
/// real axis when the pole set lies in the open upper half-plane.
struct BlaschkeAxis {
  PoleSet pole_set;
};

/// B^m evaluated factor by factor: each Moebius factor is a single complex
/// division raised to m*n_k by repeated squaring, which keeps the modulus
/// tight on the contour under large powers.
Complex eval_blaschke(const BlaschkeCircle& b, Complex z, int m = 1);
Complex eval_blaschke(const BlaschkeAxis& b, Complex z, int m = 1);

/// The positive contour weight appearing in every quadrature denominator.
/// Circle/segment rule: mu(zeta) = sum n_k (r^2 - |z_k|^2)/|zeta - z_k|^2.
/// Axis/semiaxis rule:  mu_*(x)  = sum n_k Im z_k / |x - conj(z_k)|^2.
struct WeightMu {
  PoleSet pole_set;
  Domain domain = Domain::Circle;
  double radius = 1.0;
};

double eval_mu(const WeightMu& mu, Complex zeta);  // circle/segment contour point
double eval_mu(const WeightMu& mu, double x);      // axis/semiaxis

struct SupPoint {
  double value = 0.0;
  double position = 0.0;  // theta on circles, x on the axis
};

/// Supremum of mu over the contour: dense sampling (at least 64 * total
/// points, tangent-compactified on the axis) followed by golden-section
/// refinement of every local-max bracket. Never below a sampled value.
double mu_sup(const WeightMu& mu);
SupPoint mu_argmax(const WeightMu& mu);

/// d/dtheta arg(zeta B^m(zeta)) = 1 + m mu on the circle;
/// d/dx arg B_*^m(x) = 2 m mu_* on the axis. Strictly positive.
double phase_derivative(const BlaschkeCircle& b, int m, double theta);
double phase_derivative(const BlaschkeAxis& b, int m, double x);

/// Sample-then-refine maximizer shared by mu_sup and the sup-norm
/// computations. Samples f at `samples` points of [a,b] (cyclic treats b as
/// identified with a), then golden-sections each local-max bracket down to
/// 1e-12 in position.
SupPoint scan_maximum(const std::function<double(double)>& f, double a, double b, int samples,
                      bool cyclic);

}  // namespace ratquad
