#include "horntube/geometry.hpp"

#include <cmath>

namespace horntube {

// ---------------------------------------------------------------------------
// RadiusProfile

RadiusProfile RadiusProfile::constant(double r0) { return poly({r0}); }

RadiusProfile RadiusProfile::linear(double r0, double slope) { return poly({r0, slope}); }

RadiusProfile RadiusProfile::poly(std::vector<double> coeffs) {
  if (coeffs.empty()) throw GeometryError("radius polynomial needs coefficients");
  RadiusProfile p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

RadiusProfile RadiusProfile::samples(const ArrayX& s, const ArrayX& r) {
  RadiusProfile p;
  p.spline_ = true;
  p.interp_ = CubicSpline(s, r);
  if (std::abs(p.interp_.x_min()) > 1e-9 || std::abs(p.interp_.x_max() - 1.0) > 1e-9)
    throw GeometryError("radius samples must cover s in [0,1]");
  return p;
}

double RadiusProfile::value(double s) const {
  if (spline_) return interp_.value(s);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double RadiusProfile::deriv(double s) const {
  if (spline_) return interp_.deriv(s);
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * s + coeffs_[k] * static_cast<double>(k);
  return acc;
}

double RadiusProfile::deriv2(double s) const {
  if (spline_) return interp_.deriv2(s);
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 2;)
    acc = acc * s + coeffs_[k] * static_cast<double>(k) * static_cast<double>(k - 1);
  return acc;
}

double RadiusProfile::area(double s) const {
  const double r = value(s);
  return M_PI * r * r;
}

double RadiusProfile::area_deriv(double s) const {
  return 2.0 * M_PI * value(s) * deriv(s);
}

// ---------------------------------------------------------------------------
// TubeGeometry operations

bool TubeGeometry::reflection_free_inlet() const {
  return std::abs(radius.area_deriv(0.0)) < 1e-12 && std::abs(centerline.curvature(0.0)) < 1e-12;
}

double curvature_factor(const TubeGeometry& geom, const TubePoint& p) {
  const double denom = 1.0 - p.r * geom.centerline.curvature(p.s) * std::cos(p.theta);
  if (!(denom > 0.0))
    throw GeometryError("non-folding condition violated at s = " + std::to_string(p.s));
  return 1.0 / denom;
}

SoundCorrection sound_correction(const TubeGeometry& geom, double s, double c) {
  if (!(c > 0.0)) throw DomainError("sound speed must be positive");
  const double eta = geom.eta(s);
  SoundCorrection out;
  out.sigma = 1.0 / std::sqrt(1.0 + 0.25 * eta * eta);
  out.c_s = c * out.sigma;
  return out;
}

double wall_weight(const TubeGeometry& geom, double s) {
  const double r = geom.radius.value(s);
  const double rp = geom.radius.deriv(s);
  const double eta = geom.eta(s);
  return r * std::sqrt(rp * rp + (eta - 1.0) * (eta - 1.0));
}

Vec3 to_cartesian(const TubeGeometry& geom, const TubePoint& p) {
  if (p.r < 0.0) throw DomainError("tube point has r < 0");
  const FrenetFrame f = geom.centerline.frame(p.s);
  if (p.r * f.kappa * std::cos(p.theta) >= 1.0)
    throw GeometryError("non-folding condition violated at s = " + std::to_string(p.s));
  return geom.centerline.point(p.s) + p.r * std::cos(p.theta) * f.n + p.r * std::sin(p.theta) * f.b;
}

double jacobian_det(const TubeGeometry& geom, const TubePoint& p) {
  if (!(p.r > 0.0)) throw PoleError("jacobian_det is singular at the coordinate pole r = 0");
  return curvature_factor(geom, p) / p.r;
}

GeometryReport validate(const TubeGeometry& geom, int samples) {
  GeometryReport rep;
  rep.min_wall_weight = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double s = static_cast<double>(i) / (samples - 1);
    const double eta = geom.eta(s);
    if (eta > rep.max_eta) {
      rep.max_eta = eta;
      rep.max_eta_s = s;
    }
    rep.min_wall_weight = std::min(rep.min_wall_weight, wall_weight(geom, s));
    if (!(geom.radius.value(s) > 0.0))
      rep.violations.push_back("radius not positive at s = " + std::to_string(s));
  }
  rep.arc_length_defect = geom.centerline.arc_length_defect();
  rep.reflection_free_inlet = geom.reflection_free_inlet();
  if (rep.max_eta >= 1.0)
    rep.violations.push_back("non-folding condition violated at s = " + std::to_string(rep.max_eta_s) +
                             " (eta = " + std::to_string(rep.max_eta) + ")");
  const double arc_tol = geom.centerline.family() == CurveFamily::spline ? 1e-6 : 1e-10;
  if (rep.arc_length_defect > arc_tol)
    rep.violations.push_back("arc-length parametrisation defect " + std::to_string(rep.arc_length_defect));
  rep.accepted = rep.violations.empty();
  return rep;
}

} // namespace horntube
