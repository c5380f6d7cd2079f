#ifndef HORNTUBE_QUADRATURE_HPP
#define HORNTUBE_QUADRATURE_HPP

#include "horntube/types.hpp"

namespace horntube {

/// Gauss-Legendre nodes and weights for \int_0^1 f(x) dx.
/// Computed by the Golub-Welsch eigenvalue method.
void gauss_legendre_01(int n, ArrayX& nodes, ArrayX& weights);

/// A one-dimensional quadrature rule: sum_i w[i] f(x[i]).
struct LineRule {
  ArrayX x;
  ArrayX w;

  /// Composite Gauss-Legendre rule on [a,b]: `panels` equal panels of `order` points each.
  static LineRule composite_gauss(double a, double b, int panels, int order = 4);

  /// Trapezoid rule on the n uniform nodes of [a,b] (n >= 2).
  static LineRule trapezoid(double a, double b, int n);

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
    return acc;
  }
};

/// Barycentric differentiation matrix for the given distinct nodes:
/// (D v)[i] approximates p'(x[i]) where p interpolates v on the nodes.
MatrixX differentiation_matrix(const ArrayX& nodes);

} // namespace horntube

#endif
