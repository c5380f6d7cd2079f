#include "horntube/loads.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace horntube {

double error_function(const TubeGeometry& geom, const TubePoint& p) {
  const double kappa = geom.centerline.curvature(p.s);
  const double rr = geom.radius.value(p.s);
  const double x = p.r * std::cos(p.theta);
  return -2.0 * x * kappa + kappa * kappa * (x * x - 0.25 * rr * rr);
}

void LoadTerms::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  out << "s,F,G,H\n";
  char buf[256];
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const int len = std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s[i], F[i], G[i], H[i]);
    out.write(buf, len);
  }
}

double load_F_bracket_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double s,
                         double t) {
  const double mean = planar_average_at(f, geom, grid, s, t);
  const double wall_mean = wall_average_at(f, geom, grid, s, t);
  return geom.radius.area_deriv(s) * (mean - wall_mean);
}

ArrayX load_F_bracket(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t) {
  ArrayX out(grid.ns());
  for (int i = 0; i < grid.ns(); ++i) out[i] = load_F_bracket_at(f, geom, grid, grid.s_nodes()[i], t);
  return out;
}

ArrayX fd_derivative(const ArrayX& values, double h) {
  const Eigen::Index n = values.size();
  ArrayX d(n);
  if (n < 5) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index im = std::max<Eigen::Index>(0, i - 1), ip = std::min(n - 1, i + 1);
      d[i] = (values[ip] - values[im]) / ((ip - im) * h);
    }
    return d;
  }
  for (Eigen::Index i = 2; i + 2 < n; ++i)
    d[i] = (values[i - 2] - 8.0 * values[i - 1] + 8.0 * values[i + 1] - values[i + 2]) / (12.0 * h);
  d[0] = (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2] + 16.0 * values[3] - 3.0 * values[4]) / (12.0 * h);
  d[1] = (-3.0 * values[0] - 10.0 * values[1] + 18.0 * values[2] - 6.0 * values[3] + values[4]) / (12.0 * h);
  d[n - 1] = -(-25.0 * values[n - 1] + 48.0 * values[n - 2] - 36.0 * values[n - 3] + 16.0 * values[n - 4] -
               3.0 * values[n - 5]) / (12.0 * h);
  d[n - 2] = -(-3.0 * values[n - 1] - 10.0 * values[n - 2] + 18.0 * values[n - 3] - 6.0 * values[n - 4] +
               values[n - 5]) / (12.0 * h);
  return d;
}

ArrayX load_F(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t) {
  const ArrayX bracket = load_F_bracket(f, geom, grid, t);
  ArrayX d = fd_derivative(bracket, grid.ds());
  for (int i = 0; i < grid.ns(); ++i) d[i] = -d[i] / geom.radius.area(grid.s_nodes()[i]);
  return d;
}

double load_G_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha,
                 double s, double t) {
  if (alpha < 0.0) throw DomainError("wall admittance alpha must be >= 0");
  if (alpha == 0.0) return 0.0;
  const double mean_t = planar_average_at(f, geom, grid, s, t, Channel::dt);
  const double wall_mean_t = wall_average_at(f, geom, grid, s, t, false, Channel::dt);
  const double w = wall_weight(geom, s);
  return -2.0 * M_PI * alpha * w / geom.radius.area(s) * (mean_t - wall_mean_t);
}

ArrayX load_G(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha, double t) {
  ArrayX out(grid.ns());
  for (int i = 0; i < grid.ns(); ++i) out[i] = load_G_at(f, geom, grid, alpha, grid.s_nodes()[i], t);
  return out;
}

double load_H_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha, double c,
                 double s, double t, LaplacianSource source) {
  const double area = geom.radius.area(s);

  // (1/Xi) grad(1/Xi) . grad f over the disk.
  const double curl_term = disk_quadrature(geom, grid, s, [&](double ss, double r, double th) {
    const TubePoint p{ss, r, th};
    const double xi = curvature_factor(geom, p);
    const Vec3 gxi = grad_inv_xi(geom, p);
    const FrameGradient gf = tube_gradient(f, geom, p, t);
    return (gxi[0] * gf.d1 + gxi[1] * gf.d2 + gxi[2] * gf.d3) / xi;
  });

  // E times the Laplacian (or dtt/c^2 when integrating an exact wave field).
  const double e_term = disk_quadrature(geom, grid, s, [&](double ss, double r, double th) {
    const TubePoint p{ss, r, th};
    const double lap = source == LaplacianSource::analytic
                           ? f.eval(Channel::laplacian, ss, r, th, t)
                           : f.eval(Channel::dtt, ss, r, th, t) / (c * c);
    return error_function(geom, p) * lap;
  });

  // Circumferential cos-moment of the wall time derivative.
  const double eta = geom.eta(s);
  double wall_term = 0.0;
  if (alpha > 0.0 && eta != 0.0) {
    const double moment = 2.0 * M_PI * wall_average_at(f, geom, grid, s, t, true, Channel::dt);
    wall_term = alpha * wall_weight(geom, s) * eta / area * moment;
  }

  return curl_term - e_term / area - wall_term;
}

ArrayX load_H(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha, double c,
              double t, LaplacianSource source) {
  ArrayX out(grid.ns());
  for (int i = 0; i < grid.ns(); ++i)
    out[i] = load_H_at(f, geom, grid, alpha, c, grid.s_nodes()[i], t, source);
  return out;
}

LoadTerms assemble_loads(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha,
                         double c, double t, LaplacianSource source) {
  LoadTerms lt;
  lt.s = grid.s_nodes();
  lt.t = t;
  lt.F = load_F(f, geom, grid, t);
  lt.G = load_G(f, geom, grid, alpha, t);
  lt.H = load_H(f, geom, grid, alpha, c, t, source);
  return lt;
}

} // namespace horntube
