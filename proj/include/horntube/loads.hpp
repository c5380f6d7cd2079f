#ifndef HORNTUBE_LOADS_HPP
#define HORNTUBE_LOADS_HPP

#include "horntube/averaging.hpp"

namespace horntube {

/// E(s,r,theta) = Xi^{-2} - Sigma^{-2}
///              = -2 r kappa cos(theta) + kappa^2 (r^2 cos^2(theta) - R^2/4).
double error_function(const TubeGeometry& geom, const TubePoint& p);

/// Which Laplacian the curvature load integrates against: the field's own
/// laplacian channel, or dtt/c^2 (the two agree only for exact wave solutions).
enum class LaplacianSource { analytic, wave_dtt };

/// Forcing profiles that make the planar average an exact solution of the
/// loaded horn equation. Evaluated on the grid's s nodes at time t.
struct LoadTerms {
  ArrayX s;
  ArrayX F, G, H;
  double t = 0.0;

  ArrayX total() const { return F + G + H; }
  void write_csv(const std::string& path) const;
};

/// Bracket of the area load: B(s) = A'(s) (A f - B(f|Gamma)). The weak form
/// pairs this with test-function derivatives; the strong profile divides a
/// finite-difference d/ds of it by -A.
ArrayX load_F_bracket(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t);
double load_F_bracket_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double s,
                         double t);

/// Strong profile F = -A^{-1} d/ds [bracket], 4th-order differences with
/// one-sided stencils at the ends (post-processing quality, not used by the
/// weak-form evaluation).
ArrayX load_F(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double t);

/// G = -(2 pi alpha W / A) d/dt (A f - B(f|Gamma)).
ArrayX load_G(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha, double t);
double load_G_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha,
                 double s, double t);

/// H = int_{Gamma(s)} Xi^{-1} grad(Xi^{-1}) . grad f dA
///   - A^{-1} int_{Gamma(s)} E Lap f dA
///   - (alpha W eta / A) int_0^{2pi} f_t(s,R,theta) cos(theta) dtheta.
ArrayX load_H(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha, double c,
              double t, LaplacianSource source = LaplacianSource::analytic);
double load_H_at(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha, double c,
                 double s, double t, LaplacianSource source = LaplacianSource::analytic);

LoadTerms assemble_loads(const ScalarField3& f, const TubeGeometry& geom, const TubeGrid& grid, double alpha,
                         double c, double t, LaplacianSource source = LaplacianSource::analytic);

/// 4th-order first derivative of a profile on a uniform grid (one-sided rows
/// at both ends). Used for the strong F and for post-processing only.
ArrayX fd_derivative(const ArrayX& values, double h);

} // namespace horntube

#endif
