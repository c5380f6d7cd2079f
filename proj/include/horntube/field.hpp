#ifndef HORNTUBE_FIELD_HPP
#define HORNTUBE_FIELD_HPP

#include <functional>
#include <memory>
#include <vector>

#include "horntube/geometry.hpp"
#include "horntube/grid.hpp"
#include "horntube/types.hpp"

namespace horntube {

/// Derivative channels a scalar field may provide.
enum class Channel { value, ds, dr, dtheta, dt, dtt, laplacian };

const char* channel_name(Channel ch);

/// Scalar field on the tube in (s, r, theta, t), either backed by analytic
/// closures per channel or by arrays sampled on a TubeGrid at discrete times.
/// Channel availability is checked, not assumed.
class ScalarField3 {
 public:
  using Fn = std::function<double(double s, double r, double theta, double t)>;

  struct AnalyticChannels {
    Fn value;
    Fn ds;
    Fn dr;
    Fn dtheta;
    Fn dt;
    Fn dtt;
    Fn laplacian;
  };

  ScalarField3() = default;
  static ScalarField3 analytic(AnalyticChannels channels);

  bool has(Channel ch) const;
  double eval(Channel ch, double s, double r, double theta, double t) const;
  double operator()(double s, double r, double theta, double t) const {
    return eval(Channel::value, s, r, theta, t);
  }

 private:
  std::shared_ptr<const AnalyticChannels> channels_;
};

/// Cartesian description of a field, used to build tube-coordinate channels by
/// the chain rule and to drive finite-difference oracles in tests.
struct CartesianSpec {
  std::function<double(const Vec3&, double)> value;
  std::function<Vec3(const Vec3&, double)> grad;
  std::function<double(const Vec3&, double)> laplacian;
  std::function<double(const Vec3&, double)> dt;
  std::function<double(const Vec3&, double)> dtt;
};

/// Wrap a Cartesian field as a tube-coordinate field on the given geometry.
/// ds = (t . grad)/Xi, dr = (cos n + sin b) . grad, dtheta = r (-sin n + cos b) . grad.
ScalarField3 field_from_cartesian(const TubeGeometry& geom, CartesianSpec spec);

/// Trace of a field on the tube wall r = R(s), sampled as (Ns x Ntheta).
struct WallTrace {
  ArrayX s;
  ArrayX theta;
  MatrixX values;
  MatrixX dt_values; // empty when the time derivative is not available
  bool has_dt() const { return dt_values.size() > 0; }

  static WallTrace from_field(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                              double t, bool with_dt = false);
};

/// Field sampled on a TubeGrid at discrete times. Spatial derivatives come
/// from 4th-order finite differences in s and theta (periodic) and barycentric
/// differentiation on the radial Gauss nodes. Time derivative channels must be
/// stored explicitly; they are never differenced numerically.
class SampledField {
 public:
  SampledField(const TubeGeometry& geom, const TubeGrid& grid);

  /// Append one time level. dt/dtt may be empty; shapes are (ns*nr*ntheta).
  void add_time(double t, ArrayX values, ArrayX dt = {}, ArrayX dtt = {});

  /// Sample an analytic field onto the grid (optionally with time channels).
  static SampledField sample(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid,
                             const std::vector<double>& times, bool with_dt = false, bool with_dtt = false);

  int times() const { return static_cast<int>(time_.size()); }
  double time_at(int it) const { return time_[it]; }
  const TubeGrid& grid() const { return grid_; }

  /// Node index helper: flat index of (i_s, k_r, j_theta).
  Eigen::Index idx(int i, int k, int j) const;

  bool has(Channel ch) const;
  /// Evaluate a channel at a grid node and stored time level.
  double at(Channel ch, int i, int k, int j, int it) const;

  /// View the field as a ScalarField3 restricted to grid nodes / stored times.
  /// Off-node coordinates throw DomainError.
  ScalarField3 as_field() const;

  void write_csv(const std::string& path) const;
  static SampledField read_csv(const std::string& path, const TubeGeometry& geom);

 private:
  struct Level {
    double t;
    ArrayX value, ds, dr, dtheta, dt, dtt;
  };
  void differentiate(Level& lv) const;
  int find_time(double t) const;
  int find_s(double s) const;
  int find_r(double r, int i) const;
  int find_theta(double theta) const;

  TubeGrid grid_;
  ArrayX radius_nodes_;
  std::vector<double> time_;
  std::shared_ptr<std::vector<Level>> levels_;
};

} // namespace horntube

#endif
