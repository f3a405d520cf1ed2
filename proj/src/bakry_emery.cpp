#include "argcurv/bakry_emery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace argcurv {

SymMatrix RationalMatrix::to_sym() const {
  SymMatrix out(order);
  for (int i = 0; i < order; ++i)
    for (int j = i; j < order; ++j) {
      if (at(i, j) != at(j, i))
        throw std::runtime_error("rational matrix is not symmetric");
      out.set(i, j, at(i, j).to_double());
    }
  return out;
}

std::vector<double> connection_laplacian_apply(const Graph& g, const Signature& sigma,
                                               const std::vector<double>& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("function size mismatch");
  std::vector<double> out(f.size(), 0.0);
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y : g.neighbors(x)) out[x] += sigma.sign(g, x, y) * f[y] - f[x];
  return out;
}

namespace {

struct Basis {
  std::vector<int> verts;  // x, S1 ascending, S2 ascending
  std::vector<int> pos;    // vertex -> basis index, -1 outside B2
  int s1 = 0, s2 = 0;
};

Basis b2_basis(const Graph& g, int x) {
  auto dist = bfs_distances(g, x);
  Basis b;
  b.verts.push_back(x);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == 1) { b.verts.push_back(v); ++b.s1; }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == 2) { b.verts.push_back(v); ++b.s2; }
  b.pos.assign(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(b.verts.size()); ++i) b.pos[b.verts[i]] = i;
  return b;
}

// Sparse entries of the Gamma form at w, restricted to the basis:
// Gamma^sigma(f,g)(w) = 1/2 sum_{u~w} (f(u) - s f(w)) (g(u) - s g(w)).
void add_gamma_at(const Graph& g, const Signature& sigma, const Basis& b, int w,
                  const Rational& weight, RationalMatrix& acc) {
  int pw = b.pos[w];
  Rational half = weight / Rational(2);
  for (int u : g.neighbors(w)) {
    int pu = b.pos[u];
    Rational s(sigma.sign(g, u, w));
    acc.at(pu, pu) += half;
    acc.at(pw, pw) += half;
    Rational cross = s * half;
    acc.at(pu, pw) -= cross;
    acc.at(pw, pu) -= cross;
  }
}

}  // namespace

std::vector<int> s2_in_degrees(const Graph& g, int x) {
  auto dist = bfs_distances(g, x);
  std::vector<int> out;
  for (int z = 0; z < g.vertex_count(); ++z) {
    if (dist[z] != 2) continue;
    int c = 0;
    for (int u : g.neighbors(z))
      if (dist[u] == 1) ++c;
    out.push_back(c);
  }
  return out;
}

Gamma2Form gamma2_form(const Graph& g, const Signature& sigma, int x) {
  if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("gamma2 center");
  if (static_cast<int>(sigma.signs.size()) != g.edge_count())
    throw std::invalid_argument("signature size mismatch");
  Basis b = b2_basis(g, x);
  int n = static_cast<int>(b.verts.size());

  // 2 Gamma_2 = sum_{w~x} G_w - d_x G_x - (Delta G_x + G_x Delta)
  RationalMatrix acc(n);
  for (int w : g.neighbors(x)) add_gamma_at(g, sigma, b, w, Rational(1), acc);
  add_gamma_at(g, sigma, b, x, Rational(-g.degree(x)), acc);

  RationalMatrix gx(n);
  add_gamma_at(g, sigma, b, x, Rational(1), gx);
  // subtract Delta G_x + (Delta G_x)^T using the sparsity of G_x:
  // Delta[u][v] = sigma_uv on edges, -deg(v) on the diagonal
  for (int pv = 0; pv < n; ++pv) {
    int v = b.verts[pv];
    for (int pt = 0; pt < n; ++pt) {
      const Rational& val = gx.at(pv, pt);
      if (val == Rational(0)) continue;
      Rational diag = Rational(-g.degree(v)) * val;
      acc.at(pv, pt) -= diag;
      acc.at(pt, pv) -= diag;
      for (int u : g.neighbors(v)) {
        int pu = b.pos[u];
        Rational term = Rational(sigma.sign(g, u, v)) * val;
        acc.at(pu, pt) -= term;
        acc.at(pt, pu) -= term;
      }
    }
  }

  Gamma2Form out;
  out.basis = b.verts;
  out.s1_count = b.s1;
  out.s2_count = b.s2;
  out.m = RationalMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.m.at(i, j) = acc.at(i, j) / Rational(2);
  out.gamma = std::move(gx);

  // the S2 x S2 block must be exactly (1/4) diag(d_z^-)
  auto indeg = s2_in_degrees(g, x);
  int s2b = out.s2_begin();
  for (int i = 0; i < b.s2; ++i)
    for (int j = 0; j < b.s2; ++j) {
      Rational want = (i == j) ? Rational(indeg[i], 4) : Rational(0);
      if (out.m.at(s2b + i, s2b + j) != want)
        throw std::runtime_error("Gamma_2 S2 block differs from quarter in-degrees");
    }
  return out;
}

RationalMatrix q_matrix_schur(const Graph& g, const Signature& sigma, int x) {
  Gamma2Form f = gamma2_form(g, sigma, x);
  int b1 = 1 + f.s1_count;
  int s2b = f.s2_begin();
  auto indeg = s2_in_degrees(g, x);
  RationalMatrix q(b1);
  for (int i = 0; i < b1; ++i)
    for (int j = i; j < b1; ++j) {
      Rational val = f.m.at(i, j);
      for (int k = 0; k < f.s2_count; ++k)
        val -= f.m.at(i, s2b + k) * f.m.at(j, s2b + k) * Rational(4, indeg[k]);
      q.at(i, j) = val;
      q.at(j, i) = val;
    }
  return q;
}

RationalMatrix q_matrix_formula(const Graph& g, const Signature& sigma, int x) {
  auto dopt = g.regular_degree();
  if (!dopt)
    throw std::invalid_argument("entrywise Q formulas assume a regular graph");
  int d = *dopt;
  Basis b = b2_basis(g, x);
  const auto& y = b.verts;  // y[1..d] neighbours, y[1+d..] the S2 vertices
  auto indeg = s2_in_degrees(g, x);
  int s2b = 1 + b.s1;

  auto sgn = [&](int u, int v) { return Rational(sigma.sign(g, u, v)); };
  auto adj = [&](int u, int v) { return g.has_edge(u, v); };

  // weighted in-degree of z_k: sum_i a_{y_i z_k} sigma_{x y_i} sigma_{y_i z_k}
  std::vector<Rational> w(b.s2);
  for (int k = 0; k < b.s2; ++k) {
    int z = y[s2b + k];
    Rational sum;
    for (int i = 1; i <= d; ++i)
      if (adj(y[i], z)) sum += sgn(x, y[i]) * sgn(y[i], z);
    w[k] = sum;
  }

  RationalMatrix q(1 + d);

  Rational qxx(3LL * d + 1LL * d * d);
  for (int k = 0; k < b.s2; ++k) qxx -= w[k] * w[k] / Rational(indeg[k]);
  q.at(0, 0) = qxx / Rational(4);

  for (int i = 1; i <= d; ++i) {
    Rational qxy;
    for (int j = 1; j <= d; ++j)
      if (j != i && adj(y[j], y[i])) qxy += sgn(x, y[j]) * sgn(y[j], y[i]);
    qxy -= Rational(2LL * (d + 1)) * sgn(x, y[i]);
    for (int k = 0; k < b.s2; ++k) {
      int z = y[s2b + k];
      if (adj(y[i], z)) qxy += Rational(2) * w[k] * sgn(y[i], z) / Rational(indeg[k]);
    }
    q.at(0, i) = qxy / Rational(4);
    q.at(i, 0) = q.at(0, i);
  }

  for (int i = 1; i <= d; ++i) {
    Rational qii;
    for (int j = 1; j <= d; ++j)
      if (j != i && adj(y[j], y[i])) qii += Rational(1);
    qii += Rational(2LL * (d + 1));
    for (int k = 0; k < b.s2; ++k)
      if (adj(y[i], y[s2b + k])) qii -= Rational(4, indeg[k]);
    q.at(i, i) = qii / Rational(4);
  }

  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      Rational qij;
      if (adj(y[i], y[j])) qij -= Rational(4) * sgn(y[i], y[j]);
      qij += Rational(2) * sgn(x, y[i]) * sgn(x, y[j]);
      for (int k = 0; k < b.s2; ++k) {
        int z = y[s2b + k];
        if (adj(y[i], z) && adj(y[j], z))
          qij -= Rational(4) * sgn(y[i], z) * sgn(y[j], z) / Rational(indeg[k]);
      }
      q.at(i, j) = qij / Rational(4);
      q.at(j, i) = q.at(i, j);
    }

  return q;
}

CurvaturePipelineTrace curvature_matrix(const Graph& g, const Signature& sigma, int x,
                                        QPath path) {
  Gamma2Form form = gamma2_form(g, sigma, x);
  RationalMatrix q =
      path == QPath::schur ? q_matrix_schur(g, sigma, x) : q_matrix_formula(g, sigma, x);
  int d = g.degree(x);
  if (q.order != d + 1) throw std::runtime_error("Q order mismatch");

  // 2 B Q B^T with B = identity plus the first row (1, sigma_xy1, ..., sigma_xyd).
  // That row spans the kernel of the Gamma form at x (the locally parallel
  // direction), so it degenerates to all ones exactly for the plus signature;
  // using all ones for mixed signatures would break switching invariance.
  const auto& nb = g.neighbors(x);
  std::vector<Rational> b0(d + 1, Rational(1));
  for (int i = 0; i < d; ++i) b0[i + 1] = Rational(sigma.sign(g, x, nb[i]));

  std::vector<Rational> dot(d + 1);  // (Q b0)_i
  Rational a;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) dot[i] += q.at(i, j) * b0[j];
    a += b0[i] * dot[i];
  }
  a *= Rational(2);
  if (a.to_double() < -1e-9)
    throw std::runtime_error("curvature matrix scalar a is negative");
  Rational a_dagger = (a > Rational(0) && std::abs(a.to_double()) >= 1e-9)
                          ? Rational(1) / a
                          : Rational(0);

  RationalMatrix ainf(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      Rational w_i = Rational(2) * dot[i];
      Rational w_j = Rational(2) * dot[j];
      ainf.at(i - 1, j - 1) = Rational(2) * q.at(i, j) - w_i * w_j * a_dagger;
    }

  CurvaturePipelineTrace out;
  out.basis = form.basis;
  out.s1_count = form.s1_count;
  out.s2_count = form.s2_count;
  out.gamma2 = form.m.to_sym();
  out.q = q.to_sym();
  out.a_scalar = a.to_double();
  out.curvature_matrix = ainf.to_sym();
  out.k_be = eigensolve(out.curvature_matrix).spectrum.eigenvalues.front();
  return out;
}

double k_be(const Graph& g, const Signature& sigma, int x, const KBeOptions& opts) {
  auto trace = curvature_matrix(g, sigma, x, opts.path);
  if (opts.soundness_samples > 0) {
    // CD(k,infinity) spot-check: Gamma_2(f)(x) >= k Gamma(f)(x) on random f
    Gamma2Form form = gamma2_form(g, sigma, x);
    SymMatrix g2 = form.m.to_sym();
    SymMatrix g1 = form.gamma.to_sym();
    int n = g2.order();
    std::mt19937_64 rng(opts.seed ^ (static_cast<uint64_t>(x) << 20));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> f(n);
    for (int s = 0; s < opts.soundness_samples; ++s) {
      for (auto& v : f) v = dist(rng);
      double quad2 = 0, quad1 = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          quad2 += f[i] * g2.at(i, j) * f[j];
          quad1 += f[i] * g1.at(i, j) * f[j];
        }
      if (quad2 - trace.k_be * quad1 < -1e-7)
        throw std::runtime_error("random test function violates CD(k_be, infinity)");
    }
  }
  return trace.k_be;
}

namespace {

double min_shifted_square(const Spectrum& local, double shift) {
  double best = std::numeric_limits<double>::infinity();
  for (double lam : local.eigenvalues)
    best = std::min(best, (lam - shift) * (lam - shift));
  return best;
}

}  // namespace

double closed_form_plus(const ArgParams& p, const Spectrum& local) {
  double d = p.d, alpha = p.alpha, beta = p.beta;
  double inner = (2 * d * (beta - 2) - alpha * alpha) / (2 * beta) +
                 (2 / beta) * min_shifted_square(local, alpha / 2);
  return 2 + alpha / 2 + std::min(0.0, inner);
}

double closed_form_minus(const ArgParams& p, const Spectrum& local) {
  double d = p.d, alpha = p.alpha, beta = p.beta;
  double inner = (2 * d * (beta - 2) - alpha * alpha) / (2 * beta) + 2.5 * alpha - 2 * beta +
                 (2 / beta) * min_shifted_square(local, alpha / 2 - beta);
  return 2 + std::min(0.0, inner);
}

}  // namespace argcurv
