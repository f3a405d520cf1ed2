#include "argcurv/bounds.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "argcurv/signature.hpp"

namespace argcurv {

namespace {

constexpr int kExhaustiveLimit = 16;   // 2^16 subsets, 3^16 partition pairs
constexpr int kSampleCount = 10000;
constexpr int kSampledPartitionCap = 12;  // exact partition minimum stays 2^12

long long rational_floor(const Rational& r) {
  long long p = r.num(), q = r.den();
  if (p >= 0) return p / q;
  return -((-p + q - 1) / q);
}

// ceil((beta-alpha) alpha / (beta-1)); callers gate on beta >= 2, beta >= alpha
long long matching_term(const ArgParams& p) {
  return ceil_div(static_cast<long long>(p.beta - p.alpha) * p.alpha, p.beta - 1);
}

Rational max_term(const ArgParams& p) {
  Rational half_alpha(p.alpha, 2);
  Rational ceil_part(matching_term(p));
  return half_alpha < ceil_part ? ceil_part : half_alpha;
}

bool arg_lly_hypothesis(const ArgParams& p) { return p.beta != 1 && p.beta >= p.alpha; }

VerificationReport base_report(const std::string& id) {
  VerificationReport r;
  r.bound_id = id;
  r.status = HypothesisStatus::violated;
  return r;
}

void finish(VerificationReport& r) {
  if (r.lhs && r.rhs) {
    if (std::holds_alternative<Rational>(*r.lhs) && std::holds_alternative<Rational>(*r.rhs)) {
      r.tight = std::get<Rational>(*r.lhs) == std::get<Rational>(*r.rhs);
    } else {
      r.tight = std::fabs(bound_value_as_double(*r.lhs) - bound_value_as_double(*r.rhs)) <= 1e-9;
    }
  }
}

struct WorstSubset {
  bool any = false;
  long long slack = LLONG_MAX;  // min of den*cut - num*size, exact
  std::vector<int> vertices;
  long long cut = 0;
  int size = 0;
};

std::vector<int> mask_vertices(uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

// edge-count-inside table: e_in[mask] = #edges with both ends in mask
std::vector<int> edges_inside_table(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  std::vector<int> e(1u << n, 0);
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    uint32_t low = mask & -mask;
    int v = __builtin_ctz(low);
    e[mask] = e[mask ^ low] + __builtin_popcount(nb[v] & (mask ^ low));
  }
  return e;
}

// min over subsets Omega (1 <= |Omega|, 2|Omega| <= n) of den*cut - num*|Omega|
void scan_cut_exhaustive(const Graph& g, const Rational& c, WorstSubset& w) {
  const int n = g.vertex_count();
  auto e_in = edges_inside_table(g);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  const long long num = c.num(), den = c.den();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (2 * size > n) continue;
    long long degsum = 0;
    for (uint32_t m = mask; m; m &= m - 1) degsum += deg[__builtin_ctz(m)];
    long long cut = degsum - 2 * e_in[mask];
    long long slack = den * cut - num * size;
    if (!w.any || slack < w.slack) {
      w.any = true;
      w.slack = slack;
      w.vertices = mask_vertices(mask, n);
      w.cut = cut;
      w.size = size;
    }
  }
}

std::vector<char> random_half_set(const Graph& g, std::mt19937_64& rng) {
  const int n = g.vertex_count();
  std::vector<char> in(n, 0);
  int size = 0;
  for (int v = 0; v < n; ++v)
    if (rng() & 1) {
      in[v] = 1;
      ++size;
    }
  if (2 * size > n) {
    for (int v = 0; v < n; ++v) in[v] = !in[v];
    size = n - size;
  }
  return in;
}

void scan_cut_sampled(const Graph& g, const Rational& c, uint64_t seed, WorstSubset& w) {
  const int n = g.vertex_count();
  std::mt19937_64 rng(seed);
  const long long num = c.num(), den = c.den();
  for (int it = 0; it < kSampleCount; ++it) {
    auto in = random_half_set(g, rng);
    int size = 0;
    for (int v = 0; v < n; ++v) size += in[v];
    if (size == 0) continue;
    long long cut = 0;
    for (auto [u, v] : g.edges()) cut += in[u] != in[v];
    long long slack = den * cut - num * size;
    if (!w.any || slack < w.slack) {
      w.any = true;
      w.slack = slack;
      w.vertices.clear();
      for (int v = 0; v < n; ++v)
        if (in[v]) w.vertices.push_back(v);
      w.cut = cut;
      w.size = size;
    }
  }
}

void report_cut_bound(VerificationReport& r, const Graph& g, const Rational& c, uint64_t seed) {
  WorstSubset w;
  if (g.vertex_count() <= kExhaustiveLimit) {
    scan_cut_exhaustive(g, c, w);
  } else {
    scan_cut_sampled(g, c, seed, w);
    r.note = r.note.empty() ? "sampled subsets" : r.note + "; sampled subsets";
  }
  if (!w.any) {
    r.note += (r.note.empty() ? "" : "; ") + std::string("no admissible subset");
    return;
  }
  r.lhs = Rational(w.cut);
  r.rhs = c * Rational(w.size);
  r.passed = w.slack >= 0;
  r.witness = Witness{"subset", w.vertices,
                      "cut " + std::to_string(w.cut) + ", size " + std::to_string(w.size)};
  finish(r);
}

// minimum over partitions L + R = Omega of |E(L,L)| + |E(R,R)| (ordered-pair
// counts, i.e. twice the inside-edge numbers)
long long min_partition_internal(const std::vector<int>& e_in, uint32_t omega) {
  long long best = LLONG_MAX;
  uint32_t sub = omega;
  while (true) {
    long long inside = 2ll * (e_in[sub] + e_in[omega ^ sub]);
    best = std::min(best, inside);
    if (sub == 0) break;
    sub = (sub - 1) & omega;
  }
  return best;
}

}  // namespace

double bound_value_as_double(const BoundValue& v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).to_double();
  return std::get<double>(v);
}

std::string bound_value_str(const BoundValue& v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", std::get<double>(v));
  return buf;
}

std::string hypothesis_status_str(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::satisfied: return "satisfied";
    case HypothesisStatus::violated: return "violated";
    case HypothesisStatus::conjectural: return "conjectural";
  }
  throw std::logic_error("unknown hypothesis status");
}

BoundContext build_bound_context(const Graph& g, uint64_t seed, double tolerance) {
  if (g.vertex_count() == 0 || !g.is_connected())
    throw std::invalid_argument("bound context requires a nonempty connected graph");
  BoundContext ctx{g, {}, 0, {}, false, {}, {}, {}, {}, 0, 0, seed, tolerance};
  ctx.params = detect_arg(g).params;
  ctx.diameter = diameter(g);
  ctx.adjacency = adjacency_spectrum(g);
  ctx.bipartite = g.bipartite_classes().has_value();
  if (g.regular_degree() && g.edge_count() > 0) {
    std::vector<Rational> kappa;
    kappa.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) kappa.push_back(lly_curvature(g, u, v));
    ctx.lly_min = *std::min_element(kappa.begin(), kappa.end());
    ctx.lly_edge = std::move(kappa);
  }
  KBeOptions opts;
  opts.path = QPath::schur;
  opts.soundness_samples = 0;  // the CD sampler is exercised separately
  opts.seed = seed;
  const int n = g.vertex_count();
  ctx.kbe_plus.resize(n);
  ctx.kbe_minus.resize(n);
  Signature plus = Signature::all_plus(g);
  Signature minus = Signature::all_minus(g);
  for (int x = 0; x < n; ++x) {
    ctx.kbe_plus[x] = k_be(g, plus, x, opts);
    ctx.kbe_minus[x] = k_be(g, minus, x, opts);
  }
  ctx.kbe_plus_min = *std::min_element(ctx.kbe_plus.begin(), ctx.kbe_plus.end());
  ctx.kbe_minus_min = *std::min_element(ctx.kbe_minus.begin(), ctx.kbe_minus.end());
  return ctx;
}

std::vector<VerificationReport> check_diameter_bounds(const BoundContext& ctx) {
  std::vector<VerificationReport> out;
  const int diam = ctx.diameter;

  {
    auto r = base_report("diam/arg");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else if (!arg_lly_hypothesis(*ctx.params)) {
      r.note = "needs 1 != beta >= alpha";
    } else {
      const auto& p = *ctx.params;
      if (p.alpha == 2 && p.beta == 2) {
        r.status = HypothesisStatus::conjectural;
        r.note = "alpha = beta = 2 case is conjectural; outcome is informational";
      } else {
        r.status = HypothesisStatus::satisfied;
      }
      r.lhs = Rational(diam);
      r.rhs = Rational(rational_floor(Rational(2 * p.d) / (Rational(2) + max_term(p))));
      r.passed = !(std::get<Rational>(*r.rhs) < std::get<Rational>(*r.lhs));
      finish(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("diam/matching");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else if (!arg_lly_hypothesis(*ctx.params)) {
      r.note = "needs 1 != beta >= alpha";
    } else {
      const auto& p = *ctx.params;
      r.status = HypothesisStatus::satisfied;
      r.lhs = Rational(diam);
      r.rhs = Rational(rational_floor(Rational(2 * p.d) / Rational(2 + matching_term(p))));
      r.passed = !(std::get<Rational>(*r.rhs) < std::get<Rational>(*r.lhs));
      finish(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("diam/be-alpha");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      long long lhs_h = 2ll * p.d * (p.beta - 2);
      long long rhs_h = static_cast<long long>(p.alpha) * p.alpha;
      if (lhs_h < rhs_h) {
        r.note = "needs 2d(beta-2) >= alpha^2";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = Rational(diam);
        r.rhs = Rational(rational_floor(Rational(4 * p.d, 4 + p.alpha)));
        r.passed = !(std::get<Rational>(*r.rhs) < std::get<Rational>(*r.lhs));
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("diam/be-plain");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      long long lhs_h = 2ll * p.d * (p.beta - 2);
      long long rhs_h = static_cast<long long>(p.alpha) * p.alpha -
                        static_cast<long long>(p.alpha) * p.beta;
      if (lhs_h < rhs_h) {
        r.note = "needs 2d(beta-2) >= alpha^2 - alpha beta";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = Rational(diam);
        r.rhs = Rational(p.d);
        r.passed = diam <= p.d;
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("diam/bonnet-myers-lly");
    if (!ctx.lly_min) {
      r.note = "edge curvature requires a regular graph with edges";
    } else if (!(Rational(0) < *ctx.lly_min)) {
      r.note = "no positive edge-curvature lower bound (min " + ctx.lly_min->str() + ")";
    } else {
      r.status = HypothesisStatus::satisfied;
      r.lhs = Rational(diam);
      r.rhs = Rational(2) / *ctx.lly_min;
      r.passed = !(std::get<Rational>(*r.rhs) < std::get<Rational>(*r.lhs));
      finish(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("diam/bonnet-myers-be");
    const double K = ctx.kbe_plus_min;
    if (!(K > 0)) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.10g", K);
      r.note = std::string("no positive vertex-curvature lower bound (min ") + buf + ")";
    } else {
      int dmax = 0;
      for (int v = 0; v < ctx.g.vertex_count(); ++v) dmax = std::max(dmax, ctx.g.degree(v));
      r.status = HypothesisStatus::satisfied;
      r.lhs = Rational(diam);
      r.rhs = 2.0 * dmax / K;
      r.passed = diam <= std::get<double>(*r.rhs) + ctx.tolerance;
      finish(r);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationReport> check_eigenvalue_bounds(const BoundContext& ctx) {
  std::vector<VerificationReport> out;
  const double tol = ctx.tolerance;
  const int n = ctx.g.vertex_count();
  const bool has_gap = n >= 2;
  const double th_bottom = theta_bottom(ctx.adjacency);
  const double th_second = has_gap ? theta_second(ctx.adjacency) : 0;

  {
    auto r = base_report("eig/second-arg");
    if (!ctx.params || !has_gap) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      if (!arg_lly_hypothesis(p) || (p.alpha == 2 && p.beta == 2)) {
        r.note = "needs 1 != beta >= alpha and (alpha,beta) != (2,2)";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = th_second;
        r.rhs = Rational(p.d - 2) - max_term(p);
        r.passed = th_second <= bound_value_as_double(*r.rhs) + tol;
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/second-arg-22");
    if (!ctx.params || !has_gap) {
      r.note = "not amply regular";
    } else if (ctx.params->alpha != 2 || ctx.params->beta != 2) {
      r.note = "needs alpha = beta = 2";
    } else {
      r.status = HypothesisStatus::satisfied;
      r.lhs = th_second;
      r.rhs = Rational(ctx.params->d - 2);
      r.passed = th_second <= bound_value_as_double(*r.rhs) + tol;
      finish(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/bottom-arg");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      if (ctx.diameter < 4) {
        r.note = "needs diameter at least 4";
      } else if (!(2 <= p.alpha && p.alpha <= 10 * p.beta - 12)) {
        r.note = "needs 2 <= alpha <= 10 beta - 12";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = th_bottom;
        r.rhs = Rational(-p.d + 2);
        r.passed = th_bottom >= bound_value_as_double(*r.rhs) - tol;
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/second-be-alpha");
    if (!ctx.params || !has_gap) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      if (2ll * p.d * (p.beta - 2) < static_cast<long long>(p.alpha) * p.alpha) {
        r.note = "needs 2d(beta-2) >= alpha^2";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = th_second;
        r.rhs = Rational(p.d - 2) - Rational(p.alpha, 2);
        r.passed = th_second <= bound_value_as_double(*r.rhs) + tol;
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/second-be-plain");
    if (!ctx.params || !has_gap) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      long long rhs_h = static_cast<long long>(p.alpha) * (p.alpha - p.beta);
      if (2ll * p.d * (p.beta - 2) < rhs_h) {
        r.note = "needs 2d(beta-2) >= alpha(alpha-beta)";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = th_second;
        r.rhs = Rational(p.d - 2);
        r.passed = th_second <= bound_value_as_double(*r.rhs) + tol;
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/bottom-be");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      long long rhs_h =
          static_cast<long long>(p.alpha - p.beta) * (p.alpha - 4ll * p.beta);
      if (2ll * p.d * (p.beta - 2) < rhs_h) {
        r.note = "needs 2d(beta-2) >= (alpha-beta)(alpha-4beta)";
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = th_bottom;
        r.rhs = Rational(-p.d + 2);
        r.passed = th_bottom >= bound_value_as_double(*r.rhs) - tol;
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/lichnerowicz-lly");
    auto d = ctx.g.regular_degree();
    if (!d || !has_gap) {
      r.note = "needs a regular graph";
    } else if (!ctx.lly_min || !(Rational(0) < *ctx.lly_min)) {
      r.note = "no positive edge-curvature lower bound";
    } else {
      r.status = HypothesisStatus::satisfied;
      r.lhs = *d - th_second;  // smallest nonzero Laplacian eigenvalue
      r.rhs = Rational(*d) * *ctx.lly_min;
      r.passed = bound_value_as_double(*r.lhs) >= bound_value_as_double(*r.rhs) - tol;
      finish(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/lichnerowicz-be-plus");
    auto d = ctx.g.regular_degree();
    if (!d || !has_gap) {
      r.note = "needs a regular graph";
    } else {
      r.status = HypothesisStatus::satisfied;
      r.lhs = *d - th_second;
      r.rhs = ctx.kbe_plus_min;
      r.passed = bound_value_as_double(*r.lhs) >= ctx.kbe_plus_min - tol;
      r.note = "smallest nonzero Laplacian eigenvalue vs minimum vertex curvature, all-plus signs";
      finish(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("eig/lichnerowicz-be-minus");
    auto d = ctx.g.regular_degree();
    if (!d || !has_gap) {
      r.note = "needs a regular graph";
    } else {
      r.status = HypothesisStatus::satisfied;
      double lambda;
      if (ctx.bipartite) {
        // all-minus signature is balanced on a bipartite graph, so d + theta_1
        // is its zero eigenvalue; the smallest nonzero one uses theta_2
        lambda = *d + ctx.adjacency.eigenvalues[1];
        r.note = "bipartite: balanced kernel eigenvalue d + theta_1 = 0 excluded";
      } else {
        lambda = *d + th_bottom;
        r.note = "smallest nonzero signed Laplacian eigenvalue, all-minus signs";
      }
      r.lhs = lambda;
      r.rhs = ctx.kbe_minus_min;
      r.passed = lambda >= ctx.kbe_minus_min - tol;
      finish(r);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationReport> check_isoperimetry(const BoundContext& ctx) {
  std::vector<VerificationReport> out;

  {
    auto r = base_report("iso/edge-weak");
    if (!ctx.params || !arg_lly_hypothesis(*ctx.params)) {
      r.note = "needs an amply regular graph with 1 != beta >= alpha";
    } else {
      r.status = HypothesisStatus::satisfied;
      report_cut_bound(r, ctx.g, Rational(1), ctx.seed);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("iso/edge-strong");
    if (!ctx.params || !arg_lly_hypothesis(*ctx.params) ||
        (ctx.params->alpha == 2 && ctx.params->beta == 2)) {
      r.note = "needs 1 != beta >= alpha and (alpha,beta) != (2,2)";
    } else {
      r.status = HypothesisStatus::satisfied;
      report_cut_bound(r, ctx.g, Rational(1) + max_term(*ctx.params), ctx.seed);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("iso/bipartiteness");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      long long rhs_h =
          static_cast<long long>(p.alpha - p.beta) * (p.alpha - 4ll * p.beta);
      if (2ll * p.d * (p.beta - 2) < rhs_h) {
        r.note = "needs 2d(beta-2) >= (alpha-beta)(alpha-4beta)";
      } else {
        r.status = HypothesisStatus::satisfied;
        const Graph& g = ctx.g;
        const int n = g.vertex_count();
        long long worst_slack = LLONG_MAX;
        long long worst_lhs = 0;
        std::vector<int> worst_set;
        if (n <= kExhaustiveLimit) {
          auto e_in = edges_inside_table(g);
          std::vector<int> deg(n);
          for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
          const uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
          for (uint32_t omega = 1; omega <= full; ++omega) {
            int size = __builtin_popcount(omega);
            long long degsum = 0;
            for (uint32_t m = omega; m; m &= m - 1) degsum += deg[__builtin_ctz(m)];
            long long cut = degsum - 2 * e_in[omega];
            long long lhs = min_partition_internal(e_in, omega) + cut;
            long long slack = lhs - size;
            if (slack < worst_slack) {
              worst_slack = slack;
              worst_lhs = lhs;
              worst_set = mask_vertices(omega, n);
            }
          }
        } else {
          // sampled subsets, capped so the exact partition minimum stays cheap
          std::mt19937_64 rng(ctx.seed);
          r.note = "sampled subsets of at most " + std::to_string(kSampledPartitionCap) +
                   " vertices";
          std::vector<int> idx(n);
          for (int v = 0; v < n; ++v) idx[v] = v;
          for (int it = 0; it < kSampleCount; ++it) {
            int size = 1 + static_cast<int>(rng() % kSampledPartitionCap);
            for (int j = 0; j < size; ++j) {
              int k = j + static_cast<int>(rng() % (n - j));
              std::swap(idx[j], idx[k]);
            }
            std::vector<int> omega(idx.begin(), idx.begin() + size);
            std::sort(omega.begin(), omega.end());
            std::vector<uint32_t> local_nb(size, 0);
            for (int a = 0; a < size; ++a)
              for (int b = a + 1; b < size; ++b)
                if (g.has_edge(omega[a], omega[b])) {
                  local_nb[a] |= 1u << b;
                  local_nb[b] |= 1u << a;
                }
            std::vector<int> e_loc(1u << size, 0);
            for (uint32_t m = 1; m < (1u << size); ++m) {
              uint32_t low = m & -m;
              int a = __builtin_ctz(low);
              e_loc[m] = e_loc[m ^ low] + __builtin_popcount(local_nb[a] & (m ^ low));
            }
            long long degsum = 0;
            for (int a = 0; a < size; ++a) degsum += g.degree(omega[a]);
            uint32_t full_loc = (1u << size) - 1;
            long long cut = degsum - 2 * e_loc[full_loc];
            long long lhs = min_partition_internal(e_loc, full_loc) + cut;
            long long slack = lhs - size;
            if (slack < worst_slack) {
              worst_slack = slack;
              worst_lhs = lhs;
              worst_set = omega;
            }
          }
        }
        r.lhs = Rational(worst_lhs);
        r.rhs = Rational(static_cast<long long>(worst_set.size()));
        r.passed = worst_slack >= 0;
        r.witness = Witness{"subset", worst_set,
                            "partition-internal plus boundary " + std::to_string(worst_lhs)};
        finish(r);
      }
    }
    out.push_back(r);
  }
  return out;
}

namespace {

// worst |N(W)| - c|W| over nonempty W with 2|W| <= n; c given as double
void report_expander(VerificationReport& r, const Graph& g, double c, uint64_t seed,
                     double tol) {
  const int n = g.vertex_count();
  double worst = 0;
  bool any = false;
  std::vector<int> worst_set;
  long long worst_nw = 0;
  auto consider = [&](const std::vector<char>& in) {
    int size = 0;
    for (int v = 0; v < n; ++v) size += in[v];
    if (size == 0 || 2 * size > n) return;
    std::vector<char> seen(n, 0);
    long long nw = 0;
    for (int v = 0; v < n; ++v)
      if (in[v])
        for (int u : g.neighbors(v))
          if (!in[u] && !seen[u]) {
            seen[u] = 1;
            ++nw;
          }
    double slack = nw - c * size;
    if (!any || slack < worst) {
      any = true;
      worst = slack;
      worst_nw = nw;
      worst_set.clear();
      for (int v = 0; v < n; ++v)
        if (in[v]) worst_set.push_back(v);
    }
  };
  if (n <= kExhaustiveLimit) {
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (2 * __builtin_popcount(mask) > n) continue;
      std::vector<char> in(n, 0);
      for (int v = 0; v < n; ++v) in[v] = mask >> v & 1u;
      consider(in);
    }
  } else {
    std::mt19937_64 rng(seed);
    r.note += (r.note.empty() ? "" : "; ") + std::string("sampled subsets");
    for (int it = 0; it < kSampleCount; ++it) consider(random_half_set(g, rng));
  }
  if (!any) {
    r.note += (r.note.empty() ? "" : "; ") + std::string("no admissible subset");
    return;
  }
  r.lhs = static_cast<double>(worst_nw);
  r.rhs = c * worst_set.size();
  r.passed = worst >= -tol;
  r.witness = Witness{"subset", worst_set,
                      "|N(W)| = " + std::to_string(worst_nw) + ", |W| = " +
                          std::to_string(worst_set.size())};
  finish(r);
}

}  // namespace

std::vector<VerificationReport> check_expander(const BoundContext& ctx) {
  std::vector<VerificationReport> out;

  {
    auto r = base_report("expander/curvature");
    if (!ctx.params || ctx.params->beta == 1 || ctx.params->beta <= ctx.params->alpha) {
      r.note = "needs an amply regular graph with 1 != beta > alpha";
    } else {
      const auto& p = *ctx.params;
      r.status = HypothesisStatus::satisfied;
      long long m = std::max<long long>(p.alpha, 2 * matching_term(p));
      Rational c = Rational(1) - Rational(p.d) / Rational(p.d + 4 + m);
      r.note = "expansion constant " + c.str();
      report_expander(r, ctx.g, c.to_double(), ctx.seed, ctx.tolerance);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("expander/spectral");
    auto d = ctx.g.regular_degree();
    if (!d || ctx.g.vertex_count() < 2) {
      r.note = "needs a regular graph";
    } else {
      r.status = HypothesisStatus::satisfied;
      double th = theta_second(ctx.adjacency);
      double c = 2 * (*d - th) / (3 * *d - 2 * th);
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.10g", c);
      r.note = std::string("cited result; expansion constant ") + buf;
      report_expander(r, ctx.g, c, ctx.seed, ctx.tolerance);
    }
    out.push_back(r);
  }
  return out;
}

VolumeProfile volume_profile(const Graph& g, int center) {
  const int n = g.vertex_count();
  if (center < 0 || center >= n) throw std::invalid_argument("center out of range");
  auto dist = bfs_distances(g, center);
  int ecc = 0;
  for (int v = 0; v < n; ++v) {
    if (dist[v] == Graph::kUnreachable)
      throw std::invalid_argument("volume profile requires a connected graph");
    ecc = std::max(ecc, dist[v]);
  }
  VolumeProfile p;
  p.center = center;
  p.sphere_sizes.assign(ecc + 1, 0);
  for (int v = 0; v < n; ++v) ++p.sphere_sizes[dist[v]];
  p.deg_in.assign(n, 0);
  p.deg_within.assign(n, 0);
  p.deg_out.assign(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) {
      if (dist[u] == dist[v] - 1)
        ++p.deg_in[v];
      else if (dist[u] == dist[v])
        ++p.deg_within[v];
      else
        ++p.deg_out[v];
    }
  return p;
}

namespace {

struct GrowthAccumulator {
  bool any = false;
  bool all_passed = true;
  Rational worst_slack;  // rhs - lhs at the worst level
  Rational worst_lhs, worst_rhs;
  int worst_center = -1, worst_level = -1;
  bool some_tight = false;

  void add(int center, int level, const Rational& lhs, const Rational& rhs) {
    Rational slack = rhs - lhs;
    if (slack == Rational(0)) some_tight = true;
    if (slack < Rational(0)) all_passed = false;
    if (!any || slack < worst_slack) {
      any = true;
      worst_slack = slack;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_center = center;
      worst_level = level;
    }
  }

  void fill(VerificationReport& r) const {
    if (!any) {
      r.note += (r.note.empty() ? "" : "; ") + std::string("no level to check (diameter 1)");
      r.passed = true;
      return;
    }
    r.lhs = worst_lhs;
    r.rhs = worst_rhs;
    r.passed = all_passed;
    r.witness = Witness{"center-level",
                        {worst_center},
                        "center " + std::to_string(worst_center) + ", level " +
                            std::to_string(worst_level)};
    finish(r);
  }
};

}  // namespace

std::vector<VerificationReport> check_volume_growth(const BoundContext& ctx) {
  std::vector<VerificationReport> out;
  const Graph& g = ctx.g;
  const int n = g.vertex_count();

  {
    auto r = base_report("vol/growth-arg");
    if (!ctx.params || !arg_lly_hypothesis(*ctx.params)) {
      r.note = "needs an amply regular graph with 1 != beta >= alpha";
    } else {
      r.status = HypothesisStatus::satisfied;
      const auto& p = *ctx.params;
      Rational step(2 + matching_term(p), 2);  // 1 + ceil(...)/2
      GrowthAccumulator acc;
      for (int x = 0; x < n; ++x) {
        auto profile = volume_profile(g, x);
        int ecc = static_cast<int>(profile.sphere_sizes.size()) - 1;
        for (int i = 1; i <= ecc; ++i) {
          long long si = profile.sphere_sizes[i];
          long long sip1 = i + 1 <= ecc ? profile.sphere_sizes[i + 1] : 0;
          Rational lhs = Rational(p.beta + i - 1) * Rational(sip1);
          Rational cap = std::max(Rational(p.alpha + 1), Rational(i) * step);
          Rational rhs = (Rational(p.d) - cap) * Rational(si);
          acc.add(x, i, lhs, rhs);
        }
      }
      if (acc.some_tight && acc.any) r.note = "equality attained at some level";
      acc.fill(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("vol/growth-curvature");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else if (!ctx.lly_min || !(Rational(0) < *ctx.lly_min)) {
      r.note = "no positive edge-curvature lower bound";
    } else {
      r.status = HypothesisStatus::satisfied;
      const auto& p = *ctx.params;
      const Rational k = *ctx.lly_min;
      GrowthAccumulator acc;
      for (int x = 0; x < n; ++x) {
        auto profile = volume_profile(g, x);
        int ecc = static_cast<int>(profile.sphere_sizes.size()) - 1;
        for (int i = 1; i <= ecc; ++i) {
          long long si = profile.sphere_sizes[i];
          long long sip1 = i + 1 <= ecc ? profile.sphere_sizes[i + 1] : 0;
          Rational lhs = Rational(p.beta) * Rational(sip1);
          Rational cap = std::max(Rational(p.alpha + 1),
                                  k * Rational(static_cast<long long>(i) * p.d, 2));
          Rational rhs = (Rational(p.d) - cap) * Rational(si);
          acc.add(x, i, lhs, rhs);
        }
      }
      acc.fill(r);
    }
    out.push_back(r);
  }
  {
    auto r = base_report("vol/pairwise-upper");
    if (!ctx.lly_edge) {
      r.note = "edge curvature requires a regular graph with edges";
    } else {
      r.status = HypothesisStatus::satisfied;
      r.note = "directed-degree upper bound checked for adjacent pairs";
      GrowthAccumulator acc;
      int worst_x = -1, worst_y = -1;
      Rational worst_slack;
      const auto& dist = g.distance_matrix();
      for (int ei = 0; ei < g.edge_count(); ++ei) {
        auto [u, v] = g.edges()[ei];
        const Rational& kappa = (*ctx.lly_edge)[ei];
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
          int dminus = 0, dplus = 0;
          for (int w : g.neighbors(y)) {
            if (dist[x][w] == 0) ++dminus;
            if (dist[x][w] == 2) ++dplus;
          }
          Rational rhs = Rational(1) + Rational(dminus - dplus, g.degree(y));
          bool first = !acc.any;
          Rational slack = rhs - kappa;
          if (first || slack < worst_slack) {
            worst_slack = slack;
            worst_x = x;
            worst_y = y;
          }
          acc.add(x, y, kappa, rhs);
        }
      }
      acc.fill(r);
      if (acc.any)
        r.witness = Witness{"vertex-pair",
                            {worst_x, worst_y},
                            "curvature vs directed-degree bound"};
    }
    out.push_back(r);
  }
  {
    auto r = base_report("vol/indegree");
    if (!ctx.params || !arg_lly_hypothesis(*ctx.params)) {
      r.note = "needs an amply regular graph with 1 != beta >= alpha";
    } else {
      r.status = HypothesisStatus::satisfied;
      const auto& p = *ctx.params;
      const auto& dist = g.distance_matrix();
      GrowthAccumulator acc;
      int worst_x = -1, worst_w = -1;
      long long worst_slack = LLONG_MAX;
      for (int x = 0; x < n; ++x)
        for (int w = 0; w < n; ++w) {
          int j = dist[x][w];
          if (j < 2) continue;  // w in S_{i+1} with i = j-1 >= 1
          int dminus = 0;
          for (int u : g.neighbors(w))
            if (dist[x][u] == j - 1) ++dminus;
          long long req = p.beta + j - 2;
          if (dminus - req < worst_slack) {
            worst_slack = dminus - req;
            worst_x = x;
            worst_w = w;
          }
          acc.add(x, j - 1, Rational(req), Rational(dminus));
        }
      acc.fill(r);
      if (acc.any) {
        r.lhs = acc.worst_rhs;  // report the observed in-degree as lhs >= rhs
        r.rhs = acc.worst_lhs;
        r.passed = acc.all_passed;
        r.tight = acc.worst_lhs == acc.worst_rhs;
        r.witness = Witness{"vertex-pair",
                            {worst_x, worst_w},
                            "in-degree toward the center at distance " +
                                std::to_string(ctx.g.distance(worst_x, worst_w))};
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationReport> check_finiteness_hypothesis(const BoundContext& ctx) {
  std::vector<VerificationReport> out;

  {
    auto r = base_report("flag/finiteness");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      if (p.alpha > 6 * p.beta - 9) {
        r.note = "needs alpha <= 6 beta - 9";
        r.lhs = Rational(p.alpha);
        r.rhs = Rational(6 * p.beta - 9);
      } else {
        r.status = HypothesisStatus::satisfied;
        r.lhs = Rational(p.alpha);
        r.rhs = Rational(6 * p.beta - 9);
        r.passed = true;
        r.note = "finite input: the finiteness conclusion is immediate; condition recorded";
        finish(r);
      }
    }
    out.push_back(r);
  }
  {
    auto r = base_report("flag/local-matching");
    if (!ctx.params) {
      r.note = "not amply regular";
    } else {
      const auto& p = *ctx.params;
      long long threshold = static_cast<long long>(p.alpha) * p.alpha - p.alpha + 1;
      if (p.beta <= threshold) {
        r.note = "needs beta > alpha^2 - alpha + 1";
        r.lhs = Rational(p.beta);
        r.rhs = Rational(threshold);
      } else {
        r.status = HypothesisStatus::satisfied;
        Rational expect(2 + p.alpha, p.d);
        bool ok = true;
        std::optional<std::pair<int, int>> bad;
        for (int ei = 0; ei < ctx.g.edge_count() && ok; ++ei) {
          auto [u, v] = ctx.g.edges()[ei];
          auto mc = matching_characterization(ctx.g, u, v);
          bool edge_ok = mc.attains_upper_bound && mc.matching.has_value() &&
                         ctx.lly_edge && (*ctx.lly_edge)[ei] == expect;
          if (!edge_ok) {
            ok = false;
            bad = {u, v};
          }
        }
        r.lhs = ctx.lly_min ? BoundValue(*ctx.lly_min) : BoundValue(Rational(0));
        r.rhs = expect;
        r.passed = ok;
        r.note = "every edge must attain (2+alpha)/d via a perfect matching between "
                 "private neighbourhoods";
        if (bad) r.witness = Witness{"edge", {bad->first, bad->second}, "matching missing"};
        finish(r);
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationReport> check_all(const BoundContext& ctx) {
  std::vector<VerificationReport> all;
  auto append = [&all](std::vector<VerificationReport> part) {
    for (auto& r : part) all.push_back(std::move(r));
  };
  append(check_diameter_bounds(ctx));
  append(check_eigenvalue_bounds(ctx));
  append(check_isoperimetry(ctx));
  append(check_expander(ctx));
  append(check_volume_growth(ctx));
  append(check_finiteness_hypothesis(ctx));
  std::sort(all.begin(), all.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return a.bound_id < b.bound_id;
            });
  return all;
}

}  // namespace argcurv
