#include "horntube/averaging.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace horntube {

void Profile1D::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  out << "s,value\n";
  char buf[128];
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const int len = std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s[i], v[i]);
    out.write(buf, len);
  }
}

double planar_average_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double s,
                         double t, Channel ch) {
  const double area = geom.radius.area(s);
  const double integral = disk_quadrature(geom, grid, s, [&](double ss, double r, double th) {
    return f.eval(ch, ss, r, th, t);
  });
  return integral / area;
}

Profile1D planar_average(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t) {
  Profile1D p;
  p.s = grid.s_nodes();
  p.v.resize(p.s.size());
  for (Eigen::Index i = 0; i < p.s.size(); ++i) p.v[i] = planar_average_at(f, geom, grid, p.s[i], t);
  return p;
}

double wall_average_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double s,
                       double t, bool weight_cos, Channel ch) {
  const double rr = geom.radius.value(s);
  const double integral = circle_quadrature(grid, [&](double th) {
    const double w = weight_cos ? std::cos(th) : 1.0;
    return w * f.eval(ch, s, rr, th, t);
  });
  return integral / (2.0 * M_PI);
}

Profile1D wall_average(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t,
                       bool weight_cos) {
  Profile1D p;
  p.s = grid.s_nodes();
  p.v.resize(p.s.size());
  for (Eigen::Index i = 0; i < p.s.size(); ++i)
    p.v[i] = wall_average_at(f, geom, grid, p.s[i], t, weight_cos);
  return p;
}

Profile1D wall_average(const WallTrace& trace, bool weight_cos) {
  Profile1D p;
  p.s = trace.s;
  p.v.resize(p.s.size());
  for (Eigen::Index i = 0; i < p.s.size(); ++i) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < trace.theta.size(); ++j) {
      const double w = weight_cos ? std::cos(trace.theta[j]) : 1.0;
      acc += w * trace.values(i, j);
    }
    p.v[i] = acc / trace.theta.size();
  }
  return p;
}

double average_s_derivative_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                               double s, double t) {
  const double mean_ds = planar_average_at(f, geom, grid, s, t, Channel::ds);
  const double mean = planar_average_at(f, geom, grid, s, t);
  const double wall_mean = wall_average_at(f, geom, grid, s, t);
  const double ratio = geom.radius.area_deriv(s) / geom.radius.area(s);
  return mean_ds + ratio * (wall_mean - mean);
}

Profile1D average_s_derivative(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t) {
  Profile1D p;
  p.s = grid.s_nodes();
  p.v.resize(p.s.size());
  for (Eigen::Index i = 0; i < p.s.size(); ++i)
    p.v[i] = average_s_derivative_at(f, geom, grid, p.s[i], t);
  return p;
}

} // namespace horntube
