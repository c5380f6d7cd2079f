#ifndef HORNTUBE_CENTERLINE_HPP
#define HORNTUBE_CENTERLINE_HPP

#include <memory>
#include <vector>

#include "horntube/types.hpp"

namespace horntube {

/// Orthonormal moving frame of the centerline at arc length s.
/// Right-handed: b = t x n.
struct FrenetFrame {
  Vec3 t;
  Vec3 n;
  Vec3 b;
  double kappa = 0.0;
  double tau = 0.0;
};

enum class CurveFamily { line, arc, spline };

/// Below this curvature the normal direction of the Frenet frame is numerical
/// noise; the frame falls back to a parallel-transported reference frame.
inline constexpr double kCurvatureFloor = 1e-12;

/// Cubic interpolating spline with not-a-knot end conditions.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(const ArrayX& x, const ArrayX& y);

  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;
  double deriv3(double x) const; // piecewise constant

  double x_min() const { return x_.size() ? x_[0] : 0.0; }
  double x_max() const { return x_.size() ? x_[x_.size() - 1] : 0.0; }

 private:
  Eigen::Index segment(double x) const;
  ArrayX x_;
  ArrayX a_, b_, c_, d_; // per-segment coefficients of (x - x_i)^k
};

/// A smooth curve of unit length parameterised by arc length s in [0,1].
///
/// Families:
///   line    - straight segment along +x from the origin,
///   arc     - unit-length arc of the circle of radius 1/kappa in the xy-plane,
///             gamma(s) = rho (cos(s/rho), sin(s/rho), 0),
///   spline  - planar cubic spline through sample points, rescaled to unit
///             length and re-parameterised to arc length (torsion is zero by
///             construction).
class CenterlineCurve {
 public:
  static CenterlineCurve line();
  static CenterlineCurve arc(double curvature);
  static CenterlineCurve spline(const std::vector<double>& x, const std::vector<double>& y);

  CurveFamily family() const { return family_; }

  Vec3 point(double s) const;
  FrenetFrame frame(double s) const;
  double curvature(double s) const;
  /// d kappa / d s. Analytic (zero) for line/arc; spline value is piecewise.
  double curvature_rate(double s) const;

  /// Max |(|gamma'| - 1)| over a dense sample; exact-parametrisation defect.
  double arc_length_defect(int samples = 512) const;

 private:
  CenterlineCurve() = default;
  void check_s(double s) const;

  // spline support: derivatives with respect to the internal parameter u
  Vec3 spline_point_u(double u) const;
  void spline_derivs_u(double u, Vec3& d1, Vec3& d2, Vec3& d3) const;
  double param_from_arclength(double s) const;

  CurveFamily family_ = CurveFamily::line;
  double arc_curvature_ = 0.0;

  CubicSpline sx_, sy_;
  ArrayX knot_u_;      // spline parameter at knots
  ArrayX knot_sigma_;  // cumulative arc length (original scale) at knots
  double total_length_ = 1.0;
};

/// Frenet frame, curvature and torsion at s. Requires s in [0,1].
/// Where kappa < kCurvatureFloor the (n,b) pair comes from the straight-limit
/// convention instead of t'/kappa.
FrenetFrame frenet_frame(const CenterlineCurve& curve, double s);

} // namespace horntube

#endif
