#pragma once

#include <cstdint>
#include <vector>

#include "argcurv/graph.hpp"
#include "argcurv/rational.hpp"
#include "argcurv/signature.hpp"
#include "argcurv/spectra.hpp"
#include "argcurv/sym_matrix.hpp"

namespace argcurv {

// Small dense matrix of exact rationals.
struct RationalMatrix {
  int order = 0;
  std::vector<Rational> v;

  RationalMatrix() = default;
  explicit RationalMatrix(int n) : order(n), v(static_cast<size_t>(n) * n) {}
  Rational& at(int i, int j) { return v[static_cast<size_t>(i) * order + j]; }
  const Rational& at(int i, int j) const { return v[static_cast<size_t>(i) * order + j]; }

  SymMatrix to_sym() const;
  bool operator==(const RationalMatrix&) const = default;
};

// (Delta^sigma f)(x) = sum_{y ~ x} (sigma_xy f(y) - f(x)).
std::vector<double> connection_laplacian_apply(const Graph& g, const Signature& sigma,
                                               const std::vector<double>& f);

// Gamma_2 of a signed graph at x as an exact bilinear form on functions
// supported on B_2(x). basis lists x, then S_1(x), then S_2(x), ascending
// within each sphere; m is indexed by basis positions.
struct Gamma2Form {
  std::vector<int> basis;
  int s1_count = 0;
  int s2_count = 0;
  RationalMatrix m;
  // Gamma form at x (the first-order form), same basis.
  RationalMatrix gamma;

  int s2_begin() const { return 1 + s1_count; }
};

// Exact assembly of the polarized Gamma_2 bilinear form on indicator pairs.
// The S_2 x S_2 block always equals (1/4) diag of in-degrees, which is
// asserted during assembly.
Gamma2Form gamma2_form(const Graph& g, const Signature& sigma, int x);

// In-degrees d_z^- (neighbours towards x) of the S_2(x) vertices, in basis order.
std::vector<int> s2_in_degrees(const Graph& g, int x);

// Q(x): curvature-relevant reduction of Gamma_2 to B_1(x) = {x} + S_1(x).
// Two independent routes that must agree:
//  - closed-form entries (regular graphs only),
//  - Schur complement of the S_2 block of Gamma_2.
RationalMatrix q_matrix_formula(const Graph& g, const Signature& sigma, int x);
RationalMatrix q_matrix_schur(const Graph& g, const Signature& sigma, int x);

enum class QPath { schur, formula };

struct CurvaturePipelineTrace {
  std::vector<int> basis;      // B_2(x) ordering used by gamma2
  int s1_count = 0;
  int s2_count = 0;
  SymMatrix gamma2;            // over basis
  SymMatrix q;                 // over {x} + S_1(x)
  double a_scalar = 0;         // top-left of 2 B Q B^T, always >= 0
  SymMatrix curvature_matrix;  // A_infinity, order = deg(x)
  double k_be = 0;             // smallest eigenvalue of A_infinity
};

// Full curvature-matrix pipeline at x: Q -> 2BQB^T -> pseudoinverse step ->
// A_infinity -> smallest eigenvalue. Exact rationals throughout; the single
// conversion to floating point happens just before the eigensolver.
CurvaturePipelineTrace curvature_matrix(const Graph& g, const Signature& sigma, int x,
                                        QPath path = QPath::schur);

struct KBeOptions {
  QPath path = QPath::schur;
  // random test functions checked against CD(k,infinity); 0 disables
  int soundness_samples = 1000;
  uint64_t seed = 42;
};

// Bakry-Emery curvature K(x) = lambda_min of the curvature matrix.
double k_be(const Graph& g, const Signature& sigma, int x, const KBeOptions& opts = {});

// Closed forms for amply regular graphs under the two constant signatures;
// `local` is the full adjacency spectrum of the subgraph induced on S_1(x).
double closed_form_plus(const ArgParams& params, const Spectrum& local);
double closed_form_minus(const ArgParams& params, const Spectrum& local);

}  // namespace argcurv
