#pragma once

#include <vector>

namespace argcurv {

// Dense symmetric matrix; set() mirrors so storage is exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() : order_(0) {}
  explicit SymMatrix(int order) : order_(order), data_(static_cast<size_t>(order) * order, 0.0) {}

  int order() const { return order_; }
  double at(int i, int j) const { return data_[static_cast<size_t>(i) * order_ + j]; }
  void set(int i, int j, double v) {
    data_[static_cast<size_t>(i) * order_ + j] = v;
    data_[static_cast<size_t>(j) * order_ + i] = v;
  }

  double frobenius() const;
  double offdiag_frobenius() const;

 private:
  int order_;
  std::vector<double> data_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual;                  // max |Av - lambda v| over returned pairs
};

struct EigenResult {
  Spectrum spectrum;
  // columns[k] is the eigenvector for eigenvalues[k]
  std::vector<std::vector<double>> vectors;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// 1e-12 * ||m||_F, capped at 100 sweeps. Rejects non-finite entries.
EigenResult eigensolve(const SymMatrix& m);

}  // namespace argcurv
