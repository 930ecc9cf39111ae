#pragma once

#include "ratquad/blaschke.hpp"
#include "ratquad/ratfun.hpp"

namespace ratquad {

/// All variable quadrature nodes for one (domain, m, phi): the m*total+1
/// roots of zeta B^m(zeta) = r e^{i phi} on the circle, or the m*total roots
/// of B_*^m(x) = e^{i phi} on the extended real line. Nodes are sorted by
/// contour parameter; on the axis the infinity marker, when present, is last
/// and carries no mu entry.
struct NotchSet {
  Domain domain = Domain::Circle;
  double radius = 1.0;
  int m = 1;
  double phi = 0.0;
  std::vector<ComplexPoint> nodes;
  std::vector<double> params;     // theta on circles, x on the axis (INF marker)
  std::vector<double> mu;         // weight at each finite node
  std::vector<double> residuals;  // |equation LHS - RHS| per node
  std::vector<double> x_proj;     // segment only: x_k = Re zeta_k
  bool infinite_node = false;

  int count() const { return static_cast<int>(nodes.size()); }
  int finite_count() const { return count() - (infinite_node ? 1 : 0); }
};

NotchSet notches_circle(const PoleSet& ps, double r, int m, double phi);
NotchSet notches_axis(const PoleSet& ps, int m, double phi);
NotchSet notches_semiaxis(const PoleSet& ps, int m, double phi);
NotchSet notches_segment(const PoleSet& ps, int m, double phi);

/// Parameter value phi* that places a node exactly at the prescribed contour
/// point: phi* = arg(zeta B^m(zeta)/r) at zeta = r e^{i theta}, respectively
/// arg B_*^m(x). Feeding phi* back into notches_* reproduces the point.
double prescribe_phi_circle(const PoleSet& ps, double r, int m, double theta);
double prescribe_phi_axis(const PoleSet& ps, int m, double x);

}  // namespace ratquad
