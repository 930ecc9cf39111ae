#include "ratquad/oracle.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace ratquad::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  double resabs;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[i] * (f1 + f2);
    resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * h;
  p.resabs = resabs * std::abs(h);
  const double eps = std::numeric_limits<double>::epsilon();
  p.error = std::max(std::abs((resk - resg) * h), 25.0 * eps * p.resabs);
  return p;
}

}  // namespace

IntegralEstimate integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double tol, long max_evals) {
  IntegralEstimate est;
  if (a == b) {
    est.converged = true;
    return est;
  }
  std::priority_queue<Panel> queue;
  Panel first = gk15(f, a, b);
  long evals = 15;
  double total = first.value;
  double total_err = first.error;
  double total_abs = first.resabs;
  queue.push(first);
  int panels = 1;
  while (total_err > tol * (1.0 + std::abs(total))) {
    if (!std::isfinite(total) || !std::isfinite(total_err)) {
      est.value = total;
      est.error_estimate = total_err;
      est.subdivisions = panels;
      est.converged = false;
      return est;
    }
    if (evals + 30 > max_evals || queue.empty()) {
      est.value = total;
      est.error_estimate = total_err;
      est.subdivisions = panels;
      est.converged = false;
      return est;
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) continue;  // interval exhausted by rounding
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.resabs + right.resabs - worst.resabs;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  est.value = total;
  est.error_estimate = std::max(total_err, 10.0 * eps * total_abs);
  est.subdivisions = panels;
  est.converged = std::isfinite(total) && std::isfinite(total_err);
  return est;
}

IntegralEstimate circle(const std::function<double(double)>& f_theta, double r, double tol) {
  IntegralEstimate e = integrate_interval(f_theta, 0.0, 2.0 * kPi, tol);
  e.value *= r;
  e.error_estimate *= r;
  return e;
}

IntegralEstimate axis(const std::function<double(double)>& f_x, double tol) {
  auto g = [&](double t) {
    const double c = std::cos(t);
    return f_x(std::tan(t)) / (c * c);
  };
  return integrate_interval(g, -0.5 * kPi, 0.5 * kPi, tol);
}

IntegralEstimate semiaxis(const std::function<double(double)>& f_x, Weight w, double tol) {
  // x = u^2 removes the weight singularity at 0; u = tan t compactifies.
  auto g = [&](double t) {
    const double u = std::tan(t);
    const double c = std::cos(t);
    const double fx = f_x(u * u);
    const double base = (w == Weight::Sqrt) ? 2.0 * u * u * fx : 2.0 * fx;
    return base / (c * c);
  };
  return integrate_interval(g, 0.0, 0.5 * kPi, tol);
}

IntegralEstimate segment(const std::function<double(double)>& f_x, double tol) {
  auto g = [&](double t) { return f_x(std::cos(t)); };
  return integrate_interval(g, 0.0, kPi, tol);
}

}  // namespace ratquad::oracle
