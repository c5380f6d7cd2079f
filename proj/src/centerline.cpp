#include "horntube/centerline.hpp"

#include <algorithm>
#include <cmath>

#include "horntube/quadrature.hpp"

namespace horntube {

namespace {

// 7-point Gauss rule used for arc-length integrals segment by segment.
ArrayX g7x, g7w;
void ensure_g7() {
  if (g7x.size() == 0) gauss_legendre_01(7, g7x, g7w);
}

} // namespace

// ---------------------------------------------------------------------------
// CubicSpline

CubicSpline::CubicSpline(const ArrayX& x, const ArrayX& y) {
  const Eigen::Index n = x.size();
  if (n < 2 || y.size() != n) throw DomainError("CubicSpline: need >= 2 matching samples");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (!(x[i + 1] > x[i])) throw DomainError("CubicSpline: abscissae must be increasing");
  x_ = x;
  a_.resize(n - 1);
  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);

  if (n == 2) {
    a_[0] = y[0];
    b_[0] = (y[1] - y[0]) / (x[1] - x[0]);
    c_[0] = d_[0] = 0.0;
    return;
  }

  // Solve for nodal second derivatives m; not-a-knot ends (natural for n == 3).
  MatrixX sys = MatrixX::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  ArrayX h(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) h[i] = x[i + 1] - x[i];
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    sys(i, i - 1) = h[i - 1] / 6.0;
    sys(i, i) = (h[i - 1] + h[i]) / 3.0;
    sys(i, i + 1) = h[i] / 6.0;
    rhs[i] = (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
  }
  if (n == 3) {
    sys(0, 0) = 1.0;
    sys(n - 1, n - 1) = 1.0;
  } else {
    sys(0, 0) = 1.0 / h[0];
    sys(0, 1) = -1.0 / h[0] - 1.0 / h[1];
    sys(0, 2) = 1.0 / h[1];
    sys(n - 1, n - 3) = 1.0 / h[n - 3];
    sys(n - 1, n - 2) = -1.0 / h[n - 3] - 1.0 / h[n - 2];
    sys(n - 1, n - 1) = 1.0 / h[n - 2];
  }
  Eigen::VectorXd m = sys.partialPivLu().solve(rhs);

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    a_[i] = y[i];
    c_[i] = 0.5 * m[i];
    d_[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
    b_[i] = (y[i + 1] - y[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
  }
}

Eigen::Index CubicSpline::segment(double x) const {
  const Eigen::Index n = x_.size();
  if (x <= x_[0]) return 0;
  if (x >= x_[n - 1]) return n - 2;
  auto it = std::upper_bound(x_.data(), x_.data() + n, x);
  return std::max<Eigen::Index>(0, (it - x_.data()) - 1);
}

double CubicSpline::value(double x) const {
  const Eigen::Index i = segment(x);
  const double u = x - x_[i];
  return a_[i] + u * (b_[i] + u * (c_[i] + u * d_[i]));
}

double CubicSpline::deriv(double x) const {
  const Eigen::Index i = segment(x);
  const double u = x - x_[i];
  return b_[i] + u * (2.0 * c_[i] + 3.0 * u * d_[i]);
}

double CubicSpline::deriv2(double x) const {
  const Eigen::Index i = segment(x);
  const double u = x - x_[i];
  return 2.0 * c_[i] + 6.0 * u * d_[i];
}

double CubicSpline::deriv3(double x) const {
  return 6.0 * d_[segment(x)];
}

// ---------------------------------------------------------------------------
// CenterlineCurve

CenterlineCurve CenterlineCurve::line() {
  CenterlineCurve c;
  c.family_ = CurveFamily::line;
  return c;
}

CenterlineCurve CenterlineCurve::arc(double curvature) {
  if (!(curvature > 0.0)) throw GeometryError("arc centerline needs curvature > 0 (use line otherwise)");
  CenterlineCurve c;
  c.family_ = CurveFamily::arc;
  c.arc_curvature_ = curvature;
  return c;
}

CenterlineCurve CenterlineCurve::spline(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 4)
    throw GeometryError("spline centerline needs >= 4 planar sample points");
  ensure_g7();
  CenterlineCurve c;
  c.family_ = CurveFamily::spline;

  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  // Chord-length parameter.
  ArrayX u(n);
  u[0] = 0.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double dx = x[i] - x[i - 1];
    const double dy = y[i] - y[i - 1];
    const double chord = std::hypot(dx, dy);
    if (!(chord > 0.0)) throw GeometryError("spline centerline has coincident sample points");
    u[i] = u[i - 1] + chord;
  }
  ArrayX xs = Eigen::Map<const ArrayX>(x.data(), n);
  ArrayX ys = Eigen::Map<const ArrayX>(y.data(), n);
  c.sx_ = CubicSpline(u, xs);
  c.sy_ = CubicSpline(u, ys);

  // Cumulative arc length at the knots via per-segment Gauss quadrature.
  c.knot_u_ = u;
  c.knot_sigma_.resize(n);
  c.knot_sigma_[0] = 0.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double ua = u[i - 1], ub = u[i];
    double seg = 0.0;
    for (Eigen::Index k = 0; k < g7x.size(); ++k) {
      const double uu = ua + (ub - ua) * g7x[k];
      seg += g7w[k] * std::hypot(c.sx_.deriv(uu), c.sy_.deriv(uu));
    }
    c.knot_sigma_[i] = c.knot_sigma_[i - 1] + seg * (ub - ua);
  }
  c.total_length_ = c.knot_sigma_[n - 1];
  if (!(c.total_length_ > 0.0)) throw GeometryError("spline centerline has zero length");
  return c;
}

void CenterlineCurve::check_s(double s) const {
  if (!(s >= -1e-12 && s <= 1.0 + 1e-12))
    throw DomainError("arc length s out of [0,1]: s = " + std::to_string(s));
}

double CenterlineCurve::param_from_arclength(double s) const {
  // Invert sigma(u) = s * total_length_ with a knot-table bracket plus Newton.
  const double target = std::clamp(s, 0.0, 1.0) * total_length_;
  const Eigen::Index n = knot_sigma_.size();
  Eigen::Index lo = 0;
  {
    auto it = std::upper_bound(knot_sigma_.data(), knot_sigma_.data() + n, target);
    lo = std::clamp<Eigen::Index>((it - knot_sigma_.data()) - 1, 0, n - 2);
  }
  const double ua = knot_u_[lo], ub = knot_u_[lo + 1];
  auto speed = [&](double uu) { return std::hypot(sx_.deriv(uu), sy_.deriv(uu)); };
  auto sigma_in_seg = [&](double uu) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < g7x.size(); ++k)
      acc += g7w[k] * speed(ua + (uu - ua) * g7x[k]);
    return acc * (uu - ua);
  };
  const double want = target - knot_sigma_[lo];
  double u = ua + (ub - ua) * std::clamp(want / std::max(knot_sigma_[lo + 1] - knot_sigma_[lo], 1e-300), 0.0, 1.0);
  double left = ua, right = ub;
  for (int it = 0; it < 60; ++it) {
    const double g = sigma_in_seg(u) - want;
    if (std::abs(g) < 1e-15 * std::max(1.0, total_length_)) break;
    if (g > 0.0) right = u; else left = u;
    const double du = -g / std::max(speed(u), 1e-300);
    double next = u + du;
    if (!(next > left && next < right)) next = 0.5 * (left + right);
    u = next;
  }
  return u;
}

Vec3 CenterlineCurve::spline_point_u(double u) const {
  return Vec3(sx_.value(u), sy_.value(u), 0.0) / total_length_;
}

void CenterlineCurve::spline_derivs_u(double u, Vec3& d1, Vec3& d2, Vec3& d3) const {
  d1 = Vec3(sx_.deriv(u), sy_.deriv(u), 0.0);
  d2 = Vec3(sx_.deriv2(u), sy_.deriv2(u), 0.0);
  d3 = Vec3(sx_.deriv3(u), sy_.deriv3(u), 0.0);
}

Vec3 CenterlineCurve::point(double s) const {
  check_s(s);
  switch (family_) {
    case CurveFamily::line:
      return Vec3(s, 0.0, 0.0);
    case CurveFamily::arc: {
      const double rho = 1.0 / arc_curvature_;
      return Vec3(rho * std::cos(s / rho), rho * std::sin(s / rho), 0.0);
    }
    case CurveFamily::spline:
      return spline_point_u(param_from_arclength(s));
  }
  return Vec3::Zero();
}

FrenetFrame CenterlineCurve::frame(double s) const {
  check_s(s);
  FrenetFrame f;
  f.tau = 0.0;
  switch (family_) {
    case CurveFamily::line:
      f.t = Vec3::UnitX();
      f.n = Vec3::UnitY(); // straight-limit convention: transported initial frame
      f.b = Vec3::UnitZ();
      f.kappa = 0.0;
      return f;
    case CurveFamily::arc: {
      const double rho = 1.0 / arc_curvature_;
      const double a = s / rho;
      f.t = Vec3(-std::sin(a), std::cos(a), 0.0);
      f.n = Vec3(-std::cos(a), -std::sin(a), 0.0);
      f.b = Vec3(0.0, 0.0, 1.0);
      f.kappa = arc_curvature_;
      return f;
    }
    case CurveFamily::spline: {
      const double u = param_from_arclength(s);
      Vec3 d1, d2, d3;
      spline_derivs_u(u, d1, d2, d3);
      const double q = d1.squaredNorm();
      const double speed = std::sqrt(q);
      f.t = d1 / speed;
      // Planar signed curvature; scaling to unit length multiplies it by L.
      const double signed_k = total_length_ * (d1.x() * d2.y() - d1.y() * d2.x()) / (q * speed);
      const Vec3 n_plane(-f.t.y(), f.t.x(), 0.0); // z-hat x t
      if (std::abs(signed_k) < kCurvatureFloor) {
        f.n = n_plane;
        f.b = Vec3(0.0, 0.0, 1.0);
        f.kappa = 0.0;
      } else {
        const double sgn = signed_k > 0.0 ? 1.0 : -1.0;
        f.n = sgn * n_plane;
        f.b = Vec3(0.0, 0.0, sgn);
        f.kappa = std::abs(signed_k);
      }
      return f;
    }
  }
  return f;
}

double CenterlineCurve::curvature(double s) const {
  return frame(s).kappa;
}

double CenterlineCurve::curvature_rate(double s) const {
  check_s(s);
  switch (family_) {
    case CurveFamily::line:
    case CurveFamily::arc:
      return 0.0;
    case CurveFamily::spline: {
      const double u = param_from_arclength(s);
      Vec3 d1, d2, d3;
      spline_derivs_u(u, d1, d2, d3);
      const double q = d1.squaredNorm();
      const double cross = d1.x() * d2.y() - d1.y() * d2.x();
      const double cross_rate = d1.x() * d3.y() - d1.y() * d3.x();
      const double qrate = 2.0 * (d1.dot(d2));
      // d/du of |cross| q^{-3/2}, then du/ds = L / |gamma_u|; unit-length
      // scaling contributes another factor L.
      const double sgn = cross >= 0.0 ? 1.0 : -1.0;
      const double dk_du = sgn * (cross_rate / std::pow(q, 1.5) - 1.5 * cross * qrate / std::pow(q, 2.5));
      return total_length_ * total_length_ * dk_du / std::sqrt(q);
    }
  }
  return 0.0;
}

double CenterlineCurve::arc_length_defect(int samples) const {
  // 4th-order central difference of point(s) against |gamma'| = 1.
  const double h = 1e-3;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = 2.0 * h + (1.0 - 4.0 * h) * (i + 0.5) / samples;
    const Vec3 d = (8.0 * (point(s + h) - point(s - h)) - (point(s + 2 * h) - point(s - 2 * h))) / (12.0 * h);
    worst = std::max(worst, std::abs(d.norm() - 1.0));
  }
  return worst;
}

FrenetFrame frenet_frame(const CenterlineCurve& curve, double s) {
  return curve.frame(s);
}

} // namespace horntube
