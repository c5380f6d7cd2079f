#include "horntube/field.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace horntube {

const char* channel_name(Channel ch) {
  switch (ch) {
    case Channel::value: return "value";
    case Channel::ds: return "ds";
    case Channel::dr: return "dr";
    case Channel::dtheta: return "dtheta";
    case Channel::dt: return "dt";
    case Channel::dtt: return "dtt";
    case Channel::laplacian: return "laplacian";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ScalarField3

ScalarField3 ScalarField3::analytic(AnalyticChannels channels) {
  if (!channels.value) throw CapabilityError("analytic field needs at least the value channel");
  ScalarField3 f;
  f.channels_ = std::make_shared<const AnalyticChannels>(std::move(channels));
  return f;
}

bool ScalarField3::has(Channel ch) const {
  if (!channels_) return false;
  switch (ch) {
    case Channel::value: return static_cast<bool>(channels_->value);
    case Channel::ds: return static_cast<bool>(channels_->ds);
    case Channel::dr: return static_cast<bool>(channels_->dr);
    case Channel::dtheta: return static_cast<bool>(channels_->dtheta);
    case Channel::dt: return static_cast<bool>(channels_->dt);
    case Channel::dtt: return static_cast<bool>(channels_->dtt);
    case Channel::laplacian: return static_cast<bool>(channels_->laplacian);
  }
  return false;
}

double ScalarField3::eval(Channel ch, double s, double r, double theta, double t) const {
  if (!has(ch))
    throw CapabilityError(std::string("field does not provide channel ") + channel_name(ch));
  const Fn* fn = nullptr;
  switch (ch) {
    case Channel::value: fn = &channels_->value; break;
    case Channel::ds: fn = &channels_->ds; break;
    case Channel::dr: fn = &channels_->dr; break;
    case Channel::dtheta: fn = &channels_->dtheta; break;
    case Channel::dt: fn = &channels_->dt; break;
    case Channel::dtt: fn = &channels_->dtt; break;
    case Channel::laplacian: fn = &channels_->laplacian; break;
  }
  return (*fn)(s, r, theta, t);
}

ScalarField3 field_from_cartesian(const TubeGeometry& geom, CartesianSpec spec) {
  if (!spec.value || !spec.grad)
    throw CapabilityError("cartesian field needs value and gradient closures");
  auto g = std::make_shared<const TubeGeometry>(geom);
  auto shared = std::make_shared<const CartesianSpec>(std::move(spec));

  auto position = [g](double s, double r, double theta) {
    return to_cartesian(*g, TubePoint{s, r, theta});
  };

  ScalarField3::AnalyticChannels ch;
  ch.value = [shared, position](double s, double r, double theta, double t) {
    return shared->value(position(s, r, theta), t);
  };
  ch.ds = [shared, g, position](double s, double r, double theta, double t) {
    const FrenetFrame f = g->centerline.frame(s);
    const double xi = curvature_factor(*g, TubePoint{s, r, theta});
    return shared->grad(position(s, r, theta), t).dot(f.t) / xi;
  };
  ch.dr = [shared, g, position](double s, double r, double theta, double t) {
    const FrenetFrame f = g->centerline.frame(s);
    const Vec3 dir = std::cos(theta) * f.n + std::sin(theta) * f.b;
    return shared->grad(position(s, r, theta), t).dot(dir);
  };
  ch.dtheta = [shared, g, position](double s, double r, double theta, double t) {
    const FrenetFrame f = g->centerline.frame(s);
    const Vec3 dir = r * (-std::sin(theta) * f.n + std::cos(theta) * f.b);
    return shared->grad(position(s, r, theta), t).dot(dir);
  };
  if (shared->dt)
    ch.dt = [shared, position](double s, double r, double theta, double t) {
      return shared->dt(position(s, r, theta), t);
    };
  if (shared->dtt)
    ch.dtt = [shared, position](double s, double r, double theta, double t) {
      return shared->dtt(position(s, r, theta), t);
    };
  if (shared->laplacian)
    ch.laplacian = [shared, position](double s, double r, double theta, double t) {
      return shared->laplacian(position(s, r, theta), t);
    };
  return ScalarField3::analytic(std::move(ch));
}

// ---------------------------------------------------------------------------
// WallTrace

WallTrace WallTrace::from_field(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                                double t, bool with_dt) {
  WallTrace w;
  w.s = grid.s_nodes();
  w.theta = grid.theta_nodes();
  w.values.resize(grid.ns(), grid.ntheta());
  if (with_dt) w.dt_values.resize(grid.ns(), grid.ntheta());
  for (int i = 0; i < grid.ns(); ++i) {
    const double rr = geom.radius.value(w.s[i]);
    for (int j = 0; j < grid.ntheta(); ++j) {
      w.values(i, j) = f.eval(Channel::value, w.s[i], rr, w.theta[j], t);
      if (with_dt) w.dt_values(i, j) = f.eval(Channel::dt, w.s[i], rr, w.theta[j], t);
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// SampledField

SampledField::SampledField(const TubeGeometry& geom, const TubeGrid& grid)
    : grid_(grid), levels_(std::make_shared<std::vector<Level>>()) {
  radius_nodes_.resize(grid_.ns());
  for (int i = 0; i < grid_.ns(); ++i) radius_nodes_[i] = geom.radius.value(grid_.s_nodes()[i]);
}

Eigen::Index SampledField::idx(int i, int k, int j) const {
  return (static_cast<Eigen::Index>(i) * grid_.nr() + k) * grid_.ntheta() + j;
}

void SampledField::add_time(double t, ArrayX values, ArrayX dt, ArrayX dtt) {
  const Eigen::Index expect = static_cast<Eigen::Index>(grid_.ns()) * grid_.nr() * grid_.ntheta();
  if (values.size() != expect) throw DomainError("sampled level does not conform to the grid shape");
  if (dt.size() != 0 && dt.size() != expect) throw DomainError("dt level shape mismatch");
  if (dtt.size() != 0 && dtt.size() != expect) throw DomainError("dtt level shape mismatch");
  Level lv;
  lv.t = t;
  lv.value = std::move(values);
  lv.dt = std::move(dt);
  lv.dtt = std::move(dtt);
  differentiate(lv);
  levels_->push_back(std::move(lv));
  time_.push_back(t);
}

namespace {
// 4th-order first-derivative stencils on a uniform grid.
double stencil_interior(const double* f, double h) {
  return (f[-2] - 8.0 * f[-1] + 8.0 * f[1] - f[2]) / (12.0 * h);
}
} // namespace

void SampledField::differentiate(Level& lv) const {
  const int ns = grid_.ns(), nr = grid_.nr(), nt = grid_.ntheta();
  const double hs = grid_.ds();
  const double ht = 2.0 * M_PI / nt;
  lv.ds.resize(lv.value.size());
  lv.dtheta.resize(lv.value.size());
  lv.dr.resize(lv.value.size());

  auto v = [&](int i, int k, int j) { return lv.value[idx(i, k, j)]; };

  // s derivative: centered interior, biased 4th-order rows at the ends.
  for (int k = 0; k < nr; ++k)
    for (int j = 0; j < nt; ++j) {
      for (int i = 2; i + 2 < ns; ++i) {
        const double st[5] = {v(i - 2, k, j), v(i - 1, k, j), v(i, k, j), v(i + 1, k, j), v(i + 2, k, j)};
        lv.ds[idx(i, k, j)] = stencil_interior(st + 2, hs);
      }
      auto one_sided = [&](int i0, int dir) {
        const double f0 = v(i0, k, j), f1 = v(i0 + dir, k, j), f2 = v(i0 + 2 * dir, k, j),
                     f3 = v(i0 + 3 * dir, k, j), f4 = v(i0 + 4 * dir, k, j);
        return dir * (-25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4) / (12.0 * hs);
      };
      auto near_sided = [&](int i0, int dir) {
        const double f0 = v(i0 - dir, k, j), f1 = v(i0, k, j), f2 = v(i0 + dir, k, j),
                     f3 = v(i0 + 2 * dir, k, j), f4 = v(i0 + 3 * dir, k, j);
        return dir * (-3.0 * f0 - 10.0 * f1 + 18.0 * f2 - 6.0 * f3 + f4) / (12.0 * hs);
      };
      if (ns >= 5) {
        lv.ds[idx(0, k, j)] = one_sided(0, +1);
        lv.ds[idx(1, k, j)] = near_sided(1, +1);
        lv.ds[idx(ns - 1, k, j)] = one_sided(ns - 1, -1);
        lv.ds[idx(ns - 2, k, j)] = near_sided(ns - 2, -1);
      } else {
        for (int i = 0; i < ns; ++i) {
          const int im = std::max(0, i - 1), ip = std::min(ns - 1, i + 1);
          lv.ds[idx(i, k, j)] = (v(ip, k, j) - v(im, k, j)) / ((ip - im) * hs);
        }
      }
    }

  // theta derivative: periodic centered stencil.
  for (int i = 0; i < ns; ++i)
    for (int k = 0; k < nr; ++k)
      for (int j = 0; j < nt; ++j) {
        auto wrap = [&](int jj) { return v(i, k, ((jj % nt) + nt) % nt); };
        lv.dtheta[idx(i, k, j)] =
            (wrap(j - 2) - 8.0 * wrap(j - 1) + 8.0 * wrap(j + 1) - wrap(j + 2)) / (12.0 * ht);
      }

  // r derivative: barycentric differentiation on the Gauss nodes, scaled to (0, R(s)).
  const MatrixX& dref = grid_.radial_diff();
  for (int i = 0; i < ns; ++i) {
    const double scale = 1.0 / radius_nodes_[i];
    for (int j = 0; j < nt; ++j) {
      for (int k = 0; k < nr; ++k) {
        double acc = 0.0;
        for (int m = 0; m < nr; ++m) acc += dref(k, m) * v(i, m, j);
        lv.dr[idx(i, k, j)] = acc * scale;
      }
    }
  }
}

SampledField SampledField::sample(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                                  const std::vector<double>& times, bool with_dt, bool with_dtt) {
  SampledField out(geom, grid);
  const Eigen::Index total = static_cast<Eigen::Index>(grid.ns()) * grid.nr() * grid.ntheta();
  for (double t : times) {
    ArrayX val(total), dt, dtt;
    if (with_dt) dt.resize(total);
    if (with_dtt) dtt.resize(total);
    for (int i = 0; i < grid.ns(); ++i) {
      const double s = grid.s_nodes()[i];
      const double rr = geom.radius.value(s);
      for (int k = 0; k < grid.nr(); ++k) {
        const double r = rr * grid.r_ref()[k];
        for (int j = 0; j < grid.ntheta(); ++j) {
          const double th = grid.theta_nodes()[j];
          const Eigen::Index id = out.idx(i, k, j);
          val[id] = f.eval(Channel::value, s, r, th, t);
          if (with_dt) dt[id] = f.eval(Channel::dt, s, r, th, t);
          if (with_dtt) dtt[id] = f.eval(Channel::dtt, s, r, th, t);
        }
      }
    }
    out.add_time(t, std::move(val), std::move(dt), std::move(dtt));
  }
  return out;
}

bool SampledField::has(Channel ch) const {
  if (levels_->empty()) return false;
  const Level& lv = levels_->front();
  switch (ch) {
    case Channel::value:
    case Channel::ds:
    case Channel::dr:
    case Channel::dtheta: return true;
    case Channel::dt: return lv.dt.size() > 0;
    case Channel::dtt: return lv.dtt.size() > 0;
    case Channel::laplacian: return false;
  }
  return false;
}

double SampledField::at(Channel ch, int i, int k, int j, int it) const {
  const Level& lv = (*levels_)[it];
  const Eigen::Index id = idx(i, k, j);
  switch (ch) {
    case Channel::value: return lv.value[id];
    case Channel::ds: return lv.ds[id];
    case Channel::dr: return lv.dr[id];
    case Channel::dtheta: return lv.dtheta[id];
    case Channel::dt:
      if (lv.dt.size() == 0) throw CapabilityError("sampled field has no stored dt channel");
      return lv.dt[id];
    case Channel::dtt:
      if (lv.dtt.size() == 0) throw CapabilityError("sampled field has no stored dtt channel");
      return lv.dtt[id];
    case Channel::laplacian:
      throw CapabilityError("sampled fields do not provide a laplacian channel");
  }
  return 0.0;
}

int SampledField::find_time(double t) const {
  for (std::size_t it = 0; it < time_.size(); ++it)
    if (std::abs(time_[it] - t) <= 1e-12 * std::max(1.0, std::abs(t))) return static_cast<int>(it);
  throw DomainError("sampled field has no stored level at t = " + std::to_string(t));
}

int SampledField::find_s(double s) const {
  const double pos = s / grid_.ds();
  const int i = static_cast<int>(std::lround(pos));
  if (i < 0 || i >= grid_.ns() || std::abs(pos - i) > 1e-9)
    throw DomainError("sampled field evaluated off the s grid");
  return i;
}

int SampledField::find_r(double r, int i) const {
  const double rr = radius_nodes_[i];
  for (int k = 0; k < grid_.nr(); ++k)
    if (std::abs(r - rr * grid_.r_ref()[k]) <= 1e-9 * std::max(1.0, rr)) return k;
  throw DomainError("sampled field evaluated off the radial nodes");
}

int SampledField::find_theta(double theta) const {
  const double ht = 2.0 * M_PI / grid_.ntheta();
  const double pos = theta / ht - 0.5;
  const int j = static_cast<int>(std::lround(pos));
  if (j < 0 || j >= grid_.ntheta() || std::abs(pos - j) > 1e-9)
    throw DomainError("sampled field evaluated off the theta grid");
  return j;
}

ScalarField3 SampledField::as_field() const {
  auto self = *this; // shared levels; cheap copy
  ScalarField3::AnalyticChannels ch;
  auto make = [self](Channel c) {
    return [self, c](double s, double r, double theta, double t) {
      const int it = self.find_time(t);
      const int i = self.find_s(s);
      return self.at(c, i, self.find_r(r, i), self.find_theta(theta), it);
    };
  };
  ch.value = make(Channel::value);
  ch.ds = make(Channel::ds);
  ch.dr = make(Channel::dr);
  ch.dtheta = make(Channel::dtheta);
  if (has(Channel::dt)) ch.dt = make(Channel::dt);
  if (has(Channel::dtt)) ch.dtt = make(Channel::dtt);
  return ScalarField3::analytic(std::move(ch));
}

void SampledField::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  const bool wdt = has(Channel::dt), wdtt = has(Channel::dtt);
  out << "s,r,theta,t,value";
  if (wdt) out << ",dvalue_dt";
  if (wdtt) out << ",d2value_dt2";
  out << "\n";
  char buf[512];
  for (int it = 0; it < times(); ++it) {
    const Level& lv = (*levels_)[it];
    for (int i = 0; i < grid_.ns(); ++i)
      for (int k = 0; k < grid_.nr(); ++k)
        for (int j = 0; j < grid_.ntheta(); ++j) {
          const Eigen::Index id = idx(i, k, j);
          int len = std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g",
                                  grid_.s_nodes()[i], radius_nodes_[i] * grid_.r_ref()[k],
                                  grid_.theta_nodes()[j], lv.t, lv.value[id]);
          out.write(buf, len);
          if (wdt) {
            len = std::snprintf(buf, sizeof buf, ",%.17g", lv.dt[id]);
            out.write(buf, len);
          }
          if (wdtt) {
            len = std::snprintf(buf, sizeof buf, ",%.17g", lv.dtt[id]);
            out.write(buf, len);
          }
          out << "\n";
        }
  }
}

SampledField SampledField::read_csv(const std::string& path, const TubeGeometry& geom) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw DomainError("empty field CSV " + path);
  int cols = 1;
  for (char c : header) cols += (c == ',');
  if (cols < 5) throw DomainError("field CSV needs columns s,r,theta,t,value");
  const bool wdt = cols >= 6, wdtt = cols >= 7;

  struct Row {
    double s, r, theta, t, v, dv, ddv;
  };
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row row{};
    std::istringstream ls(line);
    std::string cell;
    double* slots[7] = {&row.s, &row.r, &row.theta, &row.t, &row.v, &row.dv, &row.ddv};
    for (int c = 0; c < cols; ++c) {
      if (!std::getline(ls, cell, ',')) throw DomainError("short row in " + path);
      *slots[c] = std::stod(cell);
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw DomainError("field CSV has no data rows");

  std::vector<double> s_vals, th_vals, t_vals;
  auto push_unique = [](std::vector<double>& vec, double x, double tol) {
    for (double v : vec)
      if (std::abs(v - x) <= tol) return;
    vec.push_back(x);
  };
  for (const Row& r : rows) {
    push_unique(s_vals, r.s, 1e-12);
    push_unique(th_vals, r.theta, 1e-12);
    push_unique(t_vals, r.t, 1e-12);
  }
  std::sort(s_vals.begin(), s_vals.end());
  std::sort(th_vals.begin(), th_vals.end());
  std::sort(t_vals.begin(), t_vals.end());
  const int ns = static_cast<int>(s_vals.size());
  const int nth = static_cast<int>(th_vals.size());
  const int nr = static_cast<int>(rows.size() / (static_cast<std::size_t>(ns) * nth * t_vals.size()));
  if (static_cast<std::size_t>(ns) * nr * nth * t_vals.size() != rows.size())
    throw DomainError("field CSV is not a full (s,r,theta,t) lattice");

  TubeGrid grid(ns, nr, nth);
  SampledField out(geom, grid);
  const Eigen::Index total = static_cast<Eigen::Index>(ns) * nr * nth;
  for (std::size_t it = 0; it < t_vals.size(); ++it) {
    ArrayX val(total), dt, dtt;
    if (wdt) dt.resize(total);
    if (wdtt) dtt.resize(total);
    for (const Row& r : rows) {
      if (std::abs(r.t - t_vals[it]) > 1e-12) continue;
      const int i = static_cast<int>(std::lower_bound(s_vals.begin(), s_vals.end(), r.s - 1e-12) - s_vals.begin());
      const int j = static_cast<int>(std::lower_bound(th_vals.begin(), th_vals.end(), r.theta - 1e-12) - th_vals.begin());
      const int k = out.find_r(r.r, i);
      const Eigen::Index id = out.idx(i, k, j);
      val[id] = r.v;
      if (wdt) dt[id] = r.dv;
      if (wdtt) dtt[id] = r.ddv;
    }
    out.add_time(t_vals[it], std::move(val), std::move(dt), std::move(dtt));
  }
  return out;
}

} // namespace horntube
