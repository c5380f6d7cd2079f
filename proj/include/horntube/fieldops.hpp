#ifndef HORNTUBE_FIELDOPS_HPP
#define HORNTUBE_FIELDOPS_HPP

#include "horntube/field.hpp"
#include "horntube/geometry.hpp"
#include "horntube/grid.hpp"

namespace horntube {

/// Gradient components along the frame (t, n, b):
///   d1 = Xi ds f,  d2 = cos dr f - (sin/r) dth f,  d3 = sin dr f + (cos/r) dth f.
struct FrameGradient {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

FrameGradient tube_gradient(const ScalarField3& f, const TubeGeometry& geom, const TubePoint& p, double t);

/// Exterior normal derivative on the wall r = R(s):
///   nu . grad f = (R/W) (-R' Xi ds f + (1 - kappa R) dr f).
double wall_normal_derivative(const ScalarField3& f, const TubeGeometry& geom, double s, double theta, double t);

/// Exterior normal derivative on an end disk: -Xi ds at s = 0, +Xi ds at s = 1.
double end_normal_derivative(const ScalarField3& f, const TubeGeometry& geom, int end, double r, double theta,
                             double t);

/// grad(1/Xi) in frame components: (-r kappa'(s) Xi cos(theta), -kappa(s), 0).
Vec3 grad_inv_xi(const TubeGeometry& geom, const TubePoint& p);

// --- quadrature over the tube ------------------------------------------------

/// \int_{Gamma(s)} g dA with dA = r dr dtheta; g is any integrand g(s, r, theta).
template <class F>
double disk_quadrature(const TubeGeometry& geom, const TubeGrid& grid, double s, F&& g) {
  const double rr = geom.radius.value(s);
  const double wtheta = grid.theta_weight();
  double acc = 0.0;
  for (int k = 0; k < grid.nr(); ++k) {
    const double r = rr * grid.r_ref()[k];
    const double wr = rr * grid.r_weight_ref()[k];
    double ring = 0.0;
    for (int j = 0; j < grid.ntheta(); ++j) ring += g(s, r, grid.theta_nodes()[j]);
    acc += ring * wtheta * wr * r;
  }
  return acc;
}

/// \int_0^{2 pi} g(theta) dtheta on the wall circle at s.
template <class F>
double circle_quadrature(const TubeGrid& grid, F&& g) {
  double acc = 0.0;
  for (int j = 0; j < grid.ntheta(); ++j) acc += g(grid.theta_nodes()[j]);
  return acc * grid.theta_weight();
}

struct IntegrationDomain {
  enum class Kind { disk, wall, volume } kind;
  double s0 = 0.0;
  double s1 = 0.0;
  static IntegrationDomain disk(double s) { return {Kind::disk, s, s}; }
  static IntegrationDomain wall(double s0, double s1) { return {Kind::wall, s0, s1}; }
  static IntegrationDomain volume(double s0, double s1) { return {Kind::volume, s0, s1}; }
};

/// Integrate a field over a disk (dA = r dr dtheta), the wall (dS = W dtheta ds)
/// or a tube portion (dV = (r/Xi) ds dr dtheta). Longitudinal integration uses a
/// composite Gauss rule with `s_panels` panels (0 = derived from grid.ns()).
double integrate(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                 const IntegrationDomain& dom, double t, int s_panels = 0);

/// Same wall integral for a sampled wall trace (trapezoid in s over trace nodes).
double integrate(const WallTrace& trace, const TubeGeometry& geom, const TubeGrid& grid, double s0, double s1);

/// Generic longitudinal quadrature of a per-slice integrand over [s0,s1].
template <class F>
double longitudinal_quadrature(double s0, double s1, int panels, F&& per_s) {
  const LineRule rule = LineRule::composite_gauss(s0, s1, panels, 4);
  return rule.integrate(per_s);
}

int default_s_panels(const TubeGrid& grid);

} // namespace horntube

#endif
