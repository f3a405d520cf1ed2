#include "argcurv/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace argcurv {

double SymMatrix::frobenius() const {
  double s = 0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::offdiag_frobenius() const {
  double s = 0;
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (i != j) s += at(i, j) * at(i, j);
  return std::sqrt(s);
}

EigenResult eigensolve(const SymMatrix& m) {
  int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!std::isfinite(m.at(i, j))) throw std::invalid_argument("non-finite matrix entry");

  // working copy a, accumulated rotations v
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    v[i][i] = 1.0;
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }

  const double scale = m.frobenius();
  const double threshold = 1e-12 * scale;
  auto offdiag = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < 100 && offdiag() > threshold; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (apq == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
          a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = vkp - s * (vkq + tau * vkp);
          v[k][q] = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });

  EigenResult out;
  out.spectrum.eigenvalues.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    out.spectrum.eigenvalues[k] = a[order[k]][order[k]];
    for (int i = 0; i < n; ++i) out.vectors[k][i] = v[i][order[k]];
  }

  double residual = 0;
  for (int k = 0; k < n; ++k) {
    double lambda = out.spectrum.eigenvalues[k];
    for (int i = 0; i < n; ++i) {
      double mv = 0;
      for (int j = 0; j < n; ++j) mv += m.at(i, j) * out.vectors[k][j];
      residual = std::max(residual, std::abs(mv - lambda * out.vectors[k][i]));
    }
  }
  out.spectrum.residual = residual;
  return out;
}

}  // namespace argcurv
