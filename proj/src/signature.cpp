#include "argcurv/signature.hpp"

#include <queue>
#include <stdexcept>

namespace argcurv {

Signature switch_signature(const Graph& g, const Signature& sigma, const SwitchingFunction& tau) {
  if (static_cast<int>(sigma.signs.size()) != g.edge_count())
    throw std::invalid_argument("signature size mismatch");
  if (static_cast<int>(tau.size()) != g.vertex_count())
    throw std::invalid_argument("switching function size mismatch");
  for (int8_t t : tau)
    if (t != 1 && t != -1) throw std::invalid_argument("switching values must be +-1");
  Signature out = sigma;
  const auto& edges = g.edges();
  for (int e = 0; e < g.edge_count(); ++e)
    out.signs[e] = static_cast<int8_t>(tau[edges[e].first] * sigma.signs[e] * tau[edges[e].second]);
  return out;
}

bool is_balanced(const Graph& g, const Signature& sigma) {
  if (static_cast<int>(sigma.signs.size()) != g.edge_count())
    throw std::invalid_argument("signature size mismatch");
  // propagate tentative vertex signs; a conflict is an unbalanced cycle
  std::vector<int> s(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (s[root] != 0) continue;
    s[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        int want = s[u] * sigma.sign(g, u, w);
        if (s[w] == 0) {
          s[w] = want;
          q.push(w);
        } else if (s[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_antibalanced(const Graph& g, const Signature& sigma) {
  Signature negated = sigma;
  for (auto& v : negated.signs) v = static_cast<int8_t>(-v);
  return is_balanced(g, negated);
}

Signature random_signature(const Graph& g, std::mt19937_64& rng) {
  Signature out;
  out.signs.resize(g.edge_count());
  for (auto& v : out.signs) v = (rng() & 1) ? 1 : -1;
  return out;
}

SwitchingFunction random_switching(const Graph& g, std::mt19937_64& rng) {
  SwitchingFunction tau(g.vertex_count());
  for (auto& v : tau) v = (rng() & 1) ? 1 : -1;
  return tau;
}

}  // namespace argcurv
