#ifndef HORNTUBE_AVERAGING_HPP
#define HORNTUBE_AVERAGING_HPP

#include <string>

#include "horntube/fieldops.hpp"

namespace horntube {

/// A function of s alone on the Ns-point grid.
struct Profile1D {
  ArrayX s;
  ArrayX v;

  void write_csv(const std::string& path) const;
};

/// Planar average at one station: (A f)(s) = A(s)^{-1} \int_{Gamma(s)} f dA.
double planar_average_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double s,
                         double t, Channel ch = Channel::value);

/// Planar average on the grid's s nodes.
Profile1D planar_average(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t);

/// Circumferential wall mean (B g)(s) = (1/2pi) \int_0^{2pi} g(s, R(s), theta) dtheta.
/// `weight_cos` multiplies the integrand by cos(theta) (the moment used by the
/// curvature load).
double wall_average_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double s,
                       double t, bool weight_cos = false, Channel ch = Channel::value);

Profile1D wall_average(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t,
                       bool weight_cos = false);

/// Wall mean of a sampled trace (periodic trapezoid = midpoint in theta).
Profile1D wall_average(const WallTrace& trace, bool weight_cos = false);

/// d/ds of the planar average via the exact interchange identity
///   ds(A f) = A(ds f) + (A'/A) (B(f|Gamma) - A f),
/// evaluated without differencing the 1D profile.
double average_s_derivative_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                               double s, double t);

Profile1D average_s_derivative(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t);

} // namespace horntube

#endif
