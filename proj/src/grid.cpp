#include "horntube/grid.hpp"

namespace horntube {

TubeGrid::TubeGrid(int ns, int nr, int ntheta) {
  if (ns < 2) throw DomainError("TubeGrid: ns >= 2 required");
  if (nr < 1) throw DomainError("TubeGrid: nr >= 1 required");
  if (ntheta < 4) throw DomainError("TubeGrid: ntheta >= 4 required");
  s_ = ArrayX::LinSpaced(ns, 0.0, 1.0);
  gauss_legendre_01(nr, r_ref_, w_ref_);
  theta_.resize(ntheta);
  for (int j = 0; j < ntheta; ++j) theta_[j] = 2.0 * M_PI * (j + 0.5) / ntheta;
  d_ref_ = differentiation_matrix(r_ref_);
}

} // namespace horntube
