#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "argcurv/bakry_emery.hpp"
#include "argcurv/graph.hpp"
#include "argcurv/rational.hpp"
#include "argcurv/spectra.hpp"
#include "argcurv/transport.hpp"

namespace argcurv {

enum class HypothesisStatus { satisfied, violated, conjectural };

// Either an exact rational or a floating-point quantity.
using BoundValue = std::variant<Rational, double>;

double bound_value_as_double(const BoundValue& v);
std::string bound_value_str(const BoundValue& v);

struct Witness {
  std::string kind;           // e.g. "subset", "edge", "center-level"
  std::vector<int> vertices;
  std::string detail;
};

struct VerificationReport {
  std::string bound_id;
  HypothesisStatus status = HypothesisStatus::violated;
  std::optional<BoundValue> lhs;
  std::optional<BoundValue> rhs;
  // evaluated when the hypothesis is satisfied or conjectural; conjectural
  // outcomes are reported but never counted as failures
  std::optional<bool> passed;
  bool tight = false;         // |lhs - rhs| <= 1e-9 (exact for rationals)
  std::optional<Witness> witness;
  std::string note;
};

std::string hypothesis_status_str(HypothesisStatus s);

// Everything the bound checks consume, computed once per graph.
struct BoundContext {
  Graph g;
  std::optional<ArgParams> params;
  int diameter = 0;
  Spectrum adjacency;
  bool bipartite = false;
  // edge curvatures in edge order; present iff g is regular
  std::optional<std::vector<Rational>> lly_edge;
  std::optional<Rational> lly_min;
  // vertex Bakry-Emery curvatures for the two constant signatures
  std::vector<double> kbe_plus;
  std::vector<double> kbe_minus;
  double kbe_plus_min = 0;
  double kbe_minus_min = 0;
  uint64_t seed = 42;
  double tolerance = 1e-8;
};

BoundContext build_bound_context(const Graph& g, uint64_t seed = 42, double tolerance = 1e-8);

std::vector<VerificationReport> check_diameter_bounds(const BoundContext& ctx);
std::vector<VerificationReport> check_eigenvalue_bounds(const BoundContext& ctx);
// Exhaustive over all subsets for n <= 16, seeded sampling (10^4) above.
std::vector<VerificationReport> check_isoperimetry(const BoundContext& ctx);
std::vector<VerificationReport> check_expander(const BoundContext& ctx);
std::vector<VerificationReport> check_volume_growth(const BoundContext& ctx);
std::vector<VerificationReport> check_finiteness_hypothesis(const BoundContext& ctx);

// All of the above in canonical order.
std::vector<VerificationReport> check_all(const BoundContext& ctx);

// Sphere sizes and directed degree tables around a center.
struct VolumeProfile {
  int center = 0;
  std::vector<int> sphere_sizes;
  // per vertex: neighbours one sphere in / same sphere / one sphere out
  std::vector<int> deg_in, deg_within, deg_out;
};

VolumeProfile volume_profile(const Graph& g, int center);

}  // namespace argcurv
