#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "argcurv/bakry_emery.hpp"
#include "argcurv/bounds.hpp"
#include "argcurv/families.hpp"
#include "argcurv/graph_io.hpp"
#include "argcurv/report_json.hpp"
#include "argcurv/spectra.hpp"
#include "argcurv/transport.hpp"

using namespace argcurv;
using nlohmann::json;

namespace {

struct Source {
  std::string input;             // graph file, "-" for stdin
  std::string family;
  std::vector<int> params;

  LoadedGraph load() const {
    if (!family.empty()) {
      if (!input.empty())
        throw std::invalid_argument("choose either --input or --family, not both");
      return {generate(family, params), std::nullopt};
    }
    if (input.empty()) throw std::invalid_argument("no graph given: use --input or --family");
    if (input == "-") return read_graph(std::cin);
    return read_graph_file(input);
  }
};

void add_source_flags(CLI::App* cmd, Source& src) {
  cmd->add_option("--input", src.input, "graph file ('-' for stdin)");
  cmd->add_option("--family", src.family, "named family (see 'gen --list')");
  cmd->add_option("--params", src.params, "family parameters")->delimiter(',');
}

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// resolves plus / minus / path-to-signed-graph-file against the loaded graph
Signature resolve_signature(const Graph& g, const LoadedGraph& loaded,
                            const std::string& choice) {
  if (choice == "plus") return Signature::all_plus(g);
  if (choice == "minus") return Signature::all_minus(g);
  if (choice.empty())
    return loaded.signature ? *loaded.signature : Signature::all_plus(g);
  LoadedGraph other = read_graph_file(choice);
  if (other.graph.vertex_count() != g.vertex_count() || other.graph.edges() != g.edges())
    throw std::invalid_argument("signature file describes a different graph");
  if (!other.signature)
    throw std::invalid_argument("signature file carries no sign column");
  return *other.signature;
}

// chunks [0, count) across jobs threads; worker(i) must be data-race free
void parallel_for(int count, int jobs, const std::function<void(int)>& worker) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) worker(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) worker(i);
    });
  for (auto& th : pool) th.join();
}

int run_detect(const Source& src, const std::string& format) {
  Graph g = src.load().graph;
  ArgDetection det = detect_arg(g);
  if (format == "json") {
    json j;
    if (det.params) {
      j["amply_regular"] = true;
      j["n"] = det.params->n;
      j["d"] = det.params->d;
      j["alpha"] = det.params->alpha;
      j["beta"] = det.params->beta;
    } else {
      j["amply_regular"] = false;
      j["reason"] = det.reason;
      if (det.witness) j["witness"] = {det.witness->first, det.witness->second};
    }
    std::cout << j.dump(2) << "\n";
  } else if (det.params) {
    std::cout << "amply regular: n=" << det.params->n << " d=" << det.params->d
              << " alpha=" << det.params->alpha << " beta=" << det.params->beta << "\n";
  } else {
    std::cout << "not amply regular: " << det.reason;
    if (det.witness)
      std::cout << " (witness " << det.witness->first << "," << det.witness->second << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_lly(const Source& src, const std::string& format, int jobs) {
  Graph g = src.load().graph;
  const auto& edges = g.edges();
  std::vector<Rational> kappa(edges.size());
  parallel_for(static_cast<int>(edges.size()), jobs,
               [&](int i) { kappa[i] = lly_curvature(g, edges[i].first, edges[i].second); });
  if (format == "json") {
    json arr = json::array();
    for (size_t i = 0; i < edges.size(); ++i)
      arr.push_back({{"u", edges[i].first}, {"v", edges[i].second}, {"kappa", kappa[i].str()}});
    json j;
    j["edges"] = arr;
    if (!kappa.empty())
      j["min"] = std::min_element(kappa.begin(), kappa.end())->str();
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < edges.size(); ++i)
      std::cout << edges[i].first << " " << edges[i].second << " " << kappa[i].str() << "\n";
  }
  return 0;
}

int run_be(const Source& src, const std::string& format, const std::string& sig_choice,
           int jobs, uint64_t seed) {
  LoadedGraph loaded = src.load();
  const Graph& g = loaded.graph;
  Signature sigma = resolve_signature(g, loaded, sig_choice);
  const int n = g.vertex_count();

  // closed-form column only for the two constant signatures on an ARG
  std::optional<ArgParams> params = detect_arg(g).params;
  bool plus_form = sig_choice == "plus" || (sig_choice.empty() && !loaded.signature);
  bool minus_form = sig_choice == "minus";
  bool closed = params && (plus_form || minus_form);

  KBeOptions opts;
  opts.seed = seed;
  std::vector<double> curv(n);
  std::vector<double> form(n);
  parallel_for(n, jobs, [&](int x) {
    curv[x] = k_be(g, sigma, x, opts);
    if (closed) {
      Spectrum local = local_spectrum(g, x);
      form[x] = plus_form ? closed_form_plus(*params, local) : closed_form_minus(*params, local);
    }
  });
  if (format == "json") {
    json arr = json::array();
    for (int x = 0; x < n; ++x) {
      json row = {{"x", x}, {"k_be", curv[x]}};
      if (closed) row["closed_form"] = form[x];
      arr.push_back(row);
    }
    json j;
    j["vertices"] = arr;
    j["min"] = *std::min_element(curv.begin(), curv.end());
    std::cout << j.dump(2) << "\n";
  } else {
    for (int x = 0; x < n; ++x) {
      std::cout << x << " " << fmt_double(curv[x]);
      if (closed) std::cout << " " << fmt_double(form[x]);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_verify(const Source& src, const std::string& format, uint64_t seed, double tol) {
  Graph g = src.load().graph;
  BoundContext ctx = build_bound_context(g, seed, tol);
  auto reports = check_all(ctx);
  if (format == "json") {
    std::cout << reports_to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.bound_id << "  " << hypothesis_status_str(r.status);
      if (r.lhs && r.rhs)
        std::cout << "  lhs=" << bound_value_str(*r.lhs) << " rhs=" << bound_value_str(*r.rhs);
      if (r.passed) std::cout << (*r.passed ? "  ok" : "  FAIL");
      if (r.tight) std::cout << "  tight";
      if (!r.note.empty()) std::cout << "  [" << r.note << "]";
      std::cout << "\n";
    }
  }
  int failures = failed_assertions(reports);
  if (failures > 0) {
    for (const auto& r : reports)
      if (r.status == HypothesisStatus::satisfied && r.passed && !*r.passed) {
        std::cerr << "verification failed: " << r.bound_id << " lhs="
                  << (r.lhs ? bound_value_str(*r.lhs) : "-") << " rhs="
                  << (r.rhs ? bound_value_str(*r.rhs) : "-") << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

int run_gen(const std::string& family, const std::vector<int>& params,
            const std::string& output, bool list) {
  if (list) {
    for (auto& [name, arity] : family_catalog())
      std::cout << name << " " << arity << "\n";
    return 0;
  }
  if (family.empty()) throw std::invalid_argument("gen needs a family name");
  Graph g = generate(family, params);
  std::string text = write_graph(g);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Ricci curvature and verified bounds on graphs"};
  app.require_subcommand(1);

  std::string format = "table";
  uint64_t seed = 42;
  int jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)
      ->capture_default_str();

  Source src;

  auto* detect = app.add_subcommand("detect", "recognise amply regular parameters");
  add_source_flags(detect, src);

  auto* curvature = app.add_subcommand("curvature", "edge or vertex curvature");
  curvature->require_subcommand(1);
  auto* lly = curvature->add_subcommand("lly", "per-edge transport curvature, exact rationals");
  add_source_flags(lly, src);
  auto* be = curvature->add_subcommand("be", "per-vertex curvature for a signature");
  add_source_flags(be, src);
  std::string sig_choice;
  be->add_option("--signature", sig_choice, "plus, minus, or a signed graph file");

  auto* verify = app.add_subcommand("verify", "check every applicable bound");
  add_source_flags(verify, src);
  double tolerance = 1e-8;
  verify->add_option("--tolerance", tolerance, "spectral comparison tolerance")
      ->check(CLI::Range(0.0, 1e-8))  // may tighten, never loosen
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "write a named family as a graph file");
  std::string gen_family, gen_output;
  std::vector<int> gen_params;
  bool gen_list = false;
  gen->add_option("family", gen_family, "family name");
  gen->add_option("params", gen_params, "integer parameters");
  gen->add_option("--output", gen_output, "output file (default stdout)");
  gen->add_flag("--list", gen_list, "list known families and their arities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (detect->parsed()) return run_detect(src, format);
    if (lly->parsed()) return run_lly(src, format, jobs);
    if (be->parsed()) return run_be(src, format, sig_choice, jobs, seed);
    if (verify->parsed()) return run_verify(src, format, seed, tolerance);
    if (gen->parsed()) return run_gen(gen_family, gen_params, gen_output, gen_list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
