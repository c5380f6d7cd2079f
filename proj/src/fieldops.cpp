#include "horntube/fieldops.hpp"

#include <cmath>

namespace horntube {

FrameGradient tube_gradient(const ScalarField3& f, const TubeGeometry& geom, const TubePoint& p, double t) {
  if (!(p.r > 0.0)) throw PoleError("tube_gradient at the coordinate pole r = 0");
  const double xi = curvature_factor(geom, p);
  const double fs = f.eval(Channel::ds, p.s, p.r, p.theta, t);
  const double fr = f.eval(Channel::dr, p.s, p.r, p.theta, t);
  const double fth = f.eval(Channel::dtheta, p.s, p.r, p.theta, t);
  const double c = std::cos(p.theta), sn = std::sin(p.theta);
  FrameGradient g;
  g.d1 = xi * fs;
  g.d2 = c * fr - sn / p.r * fth;
  g.d3 = sn * fr + c / p.r * fth;
  return g;
}

double wall_normal_derivative(const ScalarField3& f, const TubeGeometry& geom, double s, double theta, double t) {
  const double r = geom.radius.value(s);
  const double w = wall_weight(geom, s);
  if (!(w > 0.0)) throw GeometryError("degenerate wall metric (W = 0) at s = " + std::to_string(s));
  const double rp = geom.radius.deriv(s);
  const double kappa = geom.centerline.curvature(s);
  const double xi = curvature_factor(geom, TubePoint{s, r, theta});
  const double fs = f.eval(Channel::ds, s, r, theta, t);
  const double fr = f.eval(Channel::dr, s, r, theta, t);
  return (r / w) * (-rp * xi * fs + (1.0 - kappa * r) * fr);
}

double end_normal_derivative(const ScalarField3& f, const TubeGeometry& geom, int end, double r, double theta,
                             double t) {
  if (end != 0 && end != 1) throw DomainError("end must be 0 or 1");
  const double s = end == 0 ? 0.0 : 1.0;
  const double xi = curvature_factor(geom, TubePoint{s, r, theta});
  const double fs = f.eval(Channel::ds, s, r, theta, t);
  return (end == 0 ? -1.0 : 1.0) * xi * fs;
}

Vec3 grad_inv_xi(const TubeGeometry& geom, const TubePoint& p) {
  const double kappa = geom.centerline.curvature(p.s);
  const double krate = geom.centerline.curvature_rate(p.s);
  const double xi = curvature_factor(geom, p);
  return Vec3(-p.r * krate * xi * std::cos(p.theta), -kappa, 0.0);
}

int default_s_panels(const TubeGrid& grid) {
  return std::max(4, (grid.ns() - 1) / 4);
}

double integrate(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                 const IntegrationDomain& dom, double t, int s_panels) {
  using Kind = IntegrationDomain::Kind;
  if (dom.kind != Kind::disk && !(dom.s0 < dom.s1))
    throw DomainError("integration domain needs s0 < s1");
  if (s_panels <= 0) s_panels = default_s_panels(grid);

  switch (dom.kind) {
    case Kind::disk:
      return disk_quadrature(geom, grid, dom.s0, [&](double s, double r, double th) {
        return f.eval(Channel::value, s, r, th, t);
      });
    case Kind::wall:
      return longitudinal_quadrature(dom.s0, dom.s1, s_panels, [&](double s) {
        const double rr = geom.radius.value(s);
        const double w = wall_weight(geom, s);
        return w * circle_quadrature(grid, [&](double th) {
          return f.eval(Channel::value, s, rr, th, t);
        });
      });
    case Kind::volume:
      return longitudinal_quadrature(dom.s0, dom.s1, s_panels, [&](double s) {
        return disk_quadrature(geom, grid, s, [&](double ss, double r, double th) {
          const double xi = curvature_factor(geom, TubePoint{ss, r, th});
          return f.eval(Channel::value, ss, r, th, t) / xi;
        });
      });
  }
  return 0.0;
}

double integrate(const WallTrace& trace, const TubeGeometry& geom, const TubeGrid& grid, double s0, double s1) {
  if (!(s0 < s1)) throw DomainError("integration domain needs s0 < s1");
  // Trapezoid over the trace's own s nodes restricted to [s0, s1].
  const double wtheta = grid.theta_weight();
  double acc = 0.0;
  double prev_s = 0.0, prev_val = 0.0;
  bool have_prev = false;
  for (Eigen::Index i = 0; i < trace.s.size(); ++i) {
    const double s = trace.s[i];
    if (s < s0 - 1e-12 || s > s1 + 1e-12) continue;
    double ring = 0.0;
    for (Eigen::Index j = 0; j < trace.theta.size(); ++j) ring += trace.values(i, j);
    const double val = wall_weight(geom, s) * ring * wtheta;
    if (have_prev) acc += 0.5 * (val + prev_val) * (s - prev_s);
    prev_s = s;
    prev_val = val;
    have_prev = true;
  }
  return acc;
}

} // namespace horntube
