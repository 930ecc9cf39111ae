#pragma once

#include <functional>

#include "ratquad/ratfun.hpp"

namespace ratquad::oracle {

inline constexpr double kDefaultTol = 1e-10;

struct IntegralEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

enum class Weight { None, InvSqrt, Sqrt };

/// Adaptive bisection with an embedded 7/15-point Gauss-Kronrod pair and a
/// priority queue ordered by panel error. Global error <= tol*(1+|value|)
/// when converged; gives up (converged=false) after max_evals integrand
/// evaluations, never returning a silent wrong value.
IntegralEstimate integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double tol = kDefaultTol, long max_evals = 1000000);

// Domain wrappers. The caller supplies the density in the domain's natural
// variable; the canonical substitution and any weight are applied here.
//   circle:   r * int_0^{2pi} f(theta) dtheta            (f(theta) = g(r e^{i theta}))
//   axis:     int_R f(x) dx                              via x = tan t
//   semiaxis: int_0^inf f(x) x^{-1/2} dx  (or x^{+1/2})  via x = u^2, u = tan t
//   segment:  int_{-1}^{1} f(x) (1-x^2)^{-1/2} dx        via x = cos t
IntegralEstimate circle(const std::function<double(double)>& f_theta, double r,
                        double tol = kDefaultTol);
IntegralEstimate axis(const std::function<double(double)>& f_x, double tol = kDefaultTol);
IntegralEstimate semiaxis(const std::function<double(double)>& f_x, Weight w,
                          double tol = kDefaultTol);
IntegralEstimate segment(const std::function<double(double)>& f_x, double tol = kDefaultTol);

}  // namespace ratquad::oracle
