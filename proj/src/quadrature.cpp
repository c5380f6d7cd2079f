#include "horntube/quadrature.hpp"

#include <cmath>

namespace horntube {

void gauss_legendre_01(int n, ArrayX& nodes, ArrayX& weights) {
  if (n < 1) throw DomainError("gauss_legendre_01: order must be >= 1");
  if (n == 1) {
    nodes = ArrayX::Constant(1, 0.5);
    weights = ArrayX::Constant(1, 1.0);
    return;
  }
  // Jacobi matrix of the Legendre recurrence; eigenvalues are the nodes on (-1,1),
  // weights follow from the first eigenvector components.
  MatrixX jacobi = MatrixX::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<MatrixX> eig(jacobi);
  nodes.resize(n);
  weights.resize(n);
  for (int k = 0; k < n; ++k) {
    const double x = eig.eigenvalues()[k];
    const double v0 = eig.eigenvectors()(0, k);
    nodes[k] = 0.5 * (x + 1.0);
    weights[k] = v0 * v0; // 2 v0^2 on (-1,1), halved by the map to (0,1)
  }
}

LineRule LineRule::composite_gauss(double a, double b, int panels, int order) {
  if (!(b > a)) throw DomainError("composite_gauss: empty interval");
  if (panels < 1) panels = 1;
  ArrayX gx, gw;
  gauss_legendre_01(order, gx, gw);
  LineRule rule;
  rule.x.resize(panels * order);
  rule.w.resize(panels * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * h;
    for (int k = 0; k < order; ++k) {
      rule.x[p * order + k] = left + h * gx[k];
      rule.w[p * order + k] = h * gw[k];
    }
  }
  return rule;
}

LineRule LineRule::trapezoid(double a, double b, int n) {
  if (n < 2) throw DomainError("trapezoid: need at least two nodes");
  LineRule rule;
  rule.x = ArrayX::LinSpaced(n, a, b);
  const double h = (b - a) / (n - 1);
  rule.w = ArrayX::Constant(n, h);
  rule.w[0] = 0.5 * h;
  rule.w[n - 1] = 0.5 * h;
  return rule;
}

MatrixX differentiation_matrix(const ArrayX& nodes) {
  const Eigen::Index n = nodes.size();
  ArrayX bary = ArrayX::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) bary[i] /= (nodes[i] - nodes[j]);
  MatrixX d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double diag = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = (bary[j] / bary[i]) / (nodes[i] - nodes[j]);
      diag -= d(i, j);
    }
    d(i, i) = diag;
  }
  return d;
}

} // namespace horntube
