#ifndef HORNTUBE_GRID_HPP
#define HORNTUBE_GRID_HPP

#include "horntube/geometry.hpp"
#include "horntube/quadrature.hpp"
#include "horntube/types.hpp"

namespace horntube {

/// Structured quadrature grid over the tube:
///   s      - Ns uniform nodes on [0,1] (inclusive),
///   r      - Nr Gauss-Legendre nodes per cross-section, scaled to (0, R(s)),
///   theta  - Ntheta uniform midpoint nodes on [0, 2 pi).
/// The radial rule integrates dr exactly for polynomials of degree < 2 Nr; the
/// midpoint rule in theta is exact for trigonometric polynomials of degree < Ntheta.
class TubeGrid {
 public:
  TubeGrid(int ns, int nr, int ntheta);

  int ns() const { return static_cast<int>(s_.size()); }
  int nr() const { return static_cast<int>(r_ref_.size()); }
  int ntheta() const { return static_cast<int>(theta_.size()); }

  const ArrayX& s_nodes() const { return s_; }
  double ds() const { return s_[1] - s_[0]; }

  /// Radial node/weight for \int_0^{R} f(r) dr at cross-section radius R:
  /// r = R * r_ref[k], weight = R * w_ref[k].
  const ArrayX& r_ref() const { return r_ref_; }
  const ArrayX& r_weight_ref() const { return w_ref_; }

  const ArrayX& theta_nodes() const { return theta_; }
  double theta_weight() const { return 2.0 * M_PI / ntheta(); }

  /// Reference-node differentiation matrix (d/dx on the r_ref nodes in (0,1)).
  const MatrixX& radial_diff() const { return d_ref_; }

 private:
  ArrayX s_;
  ArrayX r_ref_, w_ref_;
  ArrayX theta_;
  MatrixX d_ref_;
};

} // namespace horntube

#endif
