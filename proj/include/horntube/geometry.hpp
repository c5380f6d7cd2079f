#ifndef HORNTUBE_GEOMETRY_HPP
#define HORNTUBE_GEOMETRY_HPP

#include <string>
#include <vector>

#include "horntube/centerline.hpp"
#include "horntube/types.hpp"

namespace horntube {

/// Differentiable cross-section radius R(s) > 0 on [0,1].
/// Polynomial families are exact; sampled profiles interpolate with a cubic spline.
class RadiusProfile {
 public:
  static RadiusProfile constant(double r0);
  static RadiusProfile linear(double r0, double slope);
  /// R(s) = sum_k coeffs[k] s^k
  static RadiusProfile poly(std::vector<double> coeffs);
  static RadiusProfile samples(const ArrayX& s, const ArrayX& r);

  double value(double s) const;
  double deriv(double s) const;
  double deriv2(double s) const;

  /// Cross-section area A(s) = pi R(s)^2 and A'(s) = 2 pi R R'.
  double area(double s) const;
  double area_deriv(double s) const;

 private:
  RadiusProfile() = default;
  bool spline_ = false;
  std::vector<double> coeffs_;
  CubicSpline interp_;
};

/// Immutable curved-tube domain: centerline, radius profile and the derived
/// metric data. All evaluation is pure and thread-safe.
struct TubeGeometry {
  CenterlineCurve centerline;
  RadiusProfile radius;

  double eta(double s) const { return radius.value(s) * centerline.curvature(s); }

  /// True iff A'(0) = 0 and kappa(0) = 0 within 1e-12.
  bool reflection_free_inlet() const;
};

struct GeometryReport {
  double max_eta = 0.0;
  double max_eta_s = 0.0;
  double min_wall_weight = 0.0;
  double arc_length_defect = 0.0;
  bool reflection_free_inlet = false;
  bool accepted = false;
  std::vector<std::string> violations;
};

/// Curvature factor Xi = 1 / (1 - r kappa(s) cos(theta)).
/// Throws GeometryError when the non-folding bound is violated at the point.
double curvature_factor(const TubeGeometry& geom, const TubePoint& p);

/// Sound speed correction Sigma(s) = (1 + eta^2/4)^{-1/2} and c(s) = c Sigma(s).
struct SoundCorrection {
  double sigma;
  double c_s;
};
SoundCorrection sound_correction(const TubeGeometry& geom, double s, double c);

/// Wall surface measure density W(s) = R sqrt(R'^2 + (eta - 1)^2);  dS = W dtheta ds.
double wall_weight(const TubeGeometry& geom, double s);

/// Tube coordinates -> Cartesian: gamma(s) + r cos(theta) n + r sin(theta) b.
Vec3 to_cartesian(const TubeGeometry& geom, const TubePoint& p);

/// |det d(s,r,theta)/d(x,y,z)| = Xi / r. Throws PoleError at r = 0.
double jacobian_det(const TubeGeometry& geom, const TubePoint& p);

/// Scan the geometry invariants; report-only, never throws.
GeometryReport validate(const TubeGeometry& geom, int samples = 2001);

} // namespace horntube

#endif
