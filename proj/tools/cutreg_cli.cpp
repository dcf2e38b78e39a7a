// Command-line front end: spectrum / decompose / verify / maxcut / bisect /
// oracle-bench. All results go to stdout as single JSON documents; errors go
// to stderr as one-line {"error": ...}. Exit codes: 0 ok, 1 usage or I/O
// error, 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutreg/cutnorm.hpp"
#include "cutreg/graph.hpp"
#include "cutreg/maxcut.hpp"
#include "cutreg/oracle_bench.hpp"
#include "cutreg/partition_lp.hpp"
#include "cutreg/regularity.hpp"
#include "cutreg/rng.hpp"
#include "cutreg/spectral.hpp"

namespace {

using namespace cutreg;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_set(const VertexSet& s) {
  std::string out = "[";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  return out + "]";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<OracleKind> parse_oracle(const std::string& name) {
  if (name == "exact") return OracleKind::exact;
  if (name == "heuristic") return OracleKind::heuristic;
  if (name == "auto") return std::nullopt;
  throw UsageError("unknown oracle: " + name);
}

VertexSet read_vertex_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open vertex file: " + path);
  VertexSet s(n);
  int v;
  while (in >> v) {
    if (v < 0 || v >= n) {
      throw UsageError("vertex " + std::to_string(v) + " out of range in " +
                       path);
    }
    s.insert(v);
  }
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write file: " + path);
  out << text << "\n";
}

std::string solve_result_json(const SolveResult& r) {
  std::string out = "{\"S\":" + json_set(r.s);
  out += ",\"cut_A\":" + fmt(r.cut_value_a);
  out += ",\"cut_W\":" + fmt(r.cut_value_w);
  out += ",\"dS\":" + fmt(r.degree_mass);
  out += ",\"m\":" + fmt(r.m);
  out += std::string(",\"certified\":") + (r.certified ? "true" : "false");
  out += ",\"guesses_tried\":" + std::to_string(r.guesses_tried);
  return out + "}";
}

struct Cli {
  std::string input;
  std::string output;
  std::string decomp_path;
  std::vector<double> deltas;
  double epsilon = 0.5;
  std::string oracle = "auto";
  std::string mode = "standard";
  std::string objective = "max";
  std::string planted_path;
  std::string dump_partition_path;
  std::uint64_t seed = 0;
  long long budget = 1'000'000;
  int restarts = 50;
  int instances = 200;
  double gamma = -1.0;  // negative: unset
};

int cmd_spectrum(const Cli& c) {
  Graph g = load_graph_file(c.input);
  Spectrum spec = eig_sym(normalized_adjacency(g));
  std::string out = "{\"n\":" + std::to_string(g.vertex_count());
  out += ",\"m\":" + fmt(g.total_degree());
  out += ",\"total_edge_weight\":" + fmt(g.total_degree() / 2.0);
  out += ",\"eigenvalues\":[";
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    if (i) out += ',';
    out += fmt(spec.eigenvalues[i]);
  }
  out += "],\"threshold_rank\":[";
  std::vector<double> deltas = c.deltas.empty() ? std::vector<double>{0.5}
                                                : c.deltas;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) out += ',';
    ThresholdData td = threshold_rank(spec, deltas[i]);
    out += "{\"delta\":" + fmt(deltas[i]) + ",\"k\":" + fmt(td.k) +
           ",\"kept\":" + std::to_string(td.kept_indices.size()) + "}";
  }
  out += "]}";
  std::cout << out << "\n";
  return 0;
}

int cmd_decompose(const Cli& c) {
  if (!(c.epsilon > 0.0 && c.epsilon < 2.0)) {
    throw UsageError("decompose: --eps must be in (0, 2)");
  }
  Graph g = load_graph_file(c.input);
  DecomposeOptions opt;
  opt.epsilon = c.epsilon;
  opt.oracle = parse_oracle(c.oracle);
  if (c.mode == "proposition") {
    opt.mode = DecomposeMode::proposition;
  } else if (c.mode != "standard") {
    throw UsageError("decompose: --mode must be standard or proposition");
  }
  opt.seed = c.seed;
  opt.restarts = c.restarts;
  Decomposition dec = decompose(g, opt);
  write_file(c.output, decomposition_to_json(dec));

  std::string out = "{\"epsilon\":" + fmt(dec.epsilon);
  out += ",\"k\":" + fmt(dec.k);
  out += ",\"sigma\":" + std::to_string(dec.sigma());
  out += ",\"sigma_bound\":" +
         std::to_string(static_cast<long long>(
             std::ceil(16.0 * dec.k / (dec.epsilon * dec.epsilon))));
  out += ",\"alpha_max\":" + fmt(dec.alpha_max());
  out += ",\"residual_bound\":" + fmt(dec.epsilon * g.total_degree());
  out += ",\"certified_residual\":";
  out += dec.certified_residual ? fmt(*dec.certified_residual) : "null";
  out += std::string(",\"uncertified\":") +
         (dec.uncertified ? "true" : "false");
  out += ",\"output\":\"" + json_escape(c.output) + "\"}";
  std::cout << out << "\n";
  return 0;
}

int cmd_verify(const Cli& c) {
  Graph g = load_graph_file(c.input);
  std::ifstream in(c.decomp_path);
  if (!in) throw UsageError("cannot open decomposition: " + c.decomp_path);
  std::stringstream buf;
  buf << in.rdbuf();
  Decomposition dec = decomposition_from_json(buf.str(), g.vertex_count());

  double residual = residual_cutnorm_certificate(g, dec);
  double bound = dec.epsilon * g.total_degree();
  bool ok = residual <= bound + 1e-8;
  std::string out = "{\"residual\":" + fmt(residual);
  out += ",\"epsilon\":" + fmt(dec.epsilon);
  out += ",\"residual_bound\":" + fmt(bound);
  out += ",\"sigma\":" + std::to_string(dec.sigma());
  out += std::string(",\"ok\":") + (ok ? "true" : "false") + "}";
  std::cout << out << "\n";
  return ok ? 0 : 2;
}

int run_solver(const Cli& c, bool bisect) {
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
    throw UsageError("--eps must be in (0, 1)");
  }
  Graph g = load_graph_file(c.input);
  double m = g.total_degree();

  DecomposeOptions dopt;
  dopt.epsilon = c.epsilon / 4.0;
  dopt.oracle = parse_oracle(c.oracle);
  dopt.seed = Rng::derive({c.seed, 0xDEC0ull});
  dopt.restarts = c.restarts;
  Decomposition dec = decompose(g, dopt);

  if (!c.dump_partition_path.empty()) {
    double delta = compute_delta(c.epsilon,
                                 dec.sigma() == 0 ? 1.0 : dec.alpha_max(),
                                 dec.sigma(), m);
    write_file(c.dump_partition_path,
               partition_to_json(build_partition(g, dec, delta)));
  }

  SolveRequest req;
  req.epsilon = c.epsilon;
  req.budget = c.budget;
  req.seed = c.seed;

  if (bisect) {
    if (c.objective == "max") {
      req.objective = Objective::maximize;
    } else if (c.objective == "min") {
      req.objective = Objective::minimize;
    } else {
      throw UsageError("bisect: --objective must be max or min");
    }
    req.gamma = m / 2.0;
    std::cout << solve_result_json(solve(g, req, dec)) << "\n";
    return 0;
  }

  if (!c.planted_path.empty()) {
    VertexSet s_star = read_vertex_file(c.planted_path, g.vertex_count());
    req.planted = s_star;
    req.gamma = c.gamma >= 0.0 ? c.gamma : subset_degree(g, s_star);
    std::cout << solve_result_json(solve(g, req, dec)) << "\n";
    return 0;
  }
  if (c.gamma >= 0.0) {
    req.gamma = c.gamma;
    std::cout << solve_result_json(solve(g, req, dec)) << "\n";
    return 0;
  }
  std::cout << solve_result_json(
                   solve_maxcut_sweep(g, c.epsilon, c.budget, c.seed, dec))
            << "\n";
  return 0;
}

int cmd_oracle_bench(const Cli& c) {
  OracleBenchReport rep = run_oracle_bench(c.instances, c.seed, c.restarts);
  std::string out = "{\"instances\":" + std::to_string(rep.cases.size());
  out += ",\"threshold\":" + fmt(rep.threshold);
  out += ",\"passes\":" + std::to_string(rep.passes);
  out += ",\"pass_rate\":" + fmt(rep.pass_rate);
  out += ",\"min_ratio\":" + fmt(rep.min_ratio);
  out += ",\"mean_ratio\":" + fmt(rep.mean_ratio);
  out += ",\"by_kind\":[";
  for (std::size_t i = 0; i < rep.by_kind.size(); ++i) {
    if (i) out += ',';
    const auto& s = rep.by_kind[i];
    out += "{\"kind\":\"" + s.kind +
           "\",\"instances\":" + std::to_string(s.instances) +
           ",\"passes\":" + std::to_string(s.passes) +
           ",\"min_ratio\":" + fmt(s.min_ratio) +
           ",\"mean_ratio\":" + fmt(s.mean_ratio) + "}";
  }
  out += "],\"failures\":[";
  for (std::size_t i = 0; i < rep.failures.size(); ++i) {
    if (i) out += ',';
    const auto& f = rep.failures[i];
    out += "{\"index\":" + std::to_string(f.index) + ",\"kind\":\"" + f.kind +
           "\",\"n\":" + std::to_string(f.n) + ",\"exact\":" + fmt(f.exact) +
           ",\"heuristic\":" + fmt(f.heuristic) +
           ",\"ratio\":" + fmt(f.ratio) + "}";
  }
  out += "]}";
  std::cout << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Cli c;
  CLI::App app{"Weak regularity decompositions and additive max-cut / "
               "bisection approximations for low threshold-rank graphs"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues of the normalized adjacency and threshold ranks");
  spectrum->add_option("--delta", c.deltas, "Threshold value (repeatable)");
  spectrum->add_option("input", c.input, "Edge-list file")->required();

  auto* decompose = app.add_subcommand(
      "decompose", "Write a cut-matrix decomposition with residual <= eps*m");
  decompose->add_option("--eps", c.epsilon, "Accuracy in multiples of m")
      ->required();
  decompose->add_option("--oracle", c.oracle, "exact|heuristic|auto");
  decompose->add_option("--mode", c.mode, "standard|proposition");
  decompose->add_option("--seed", c.seed, "Random seed");
  decompose->add_option("--restarts", c.restarts, "Heuristic oracle restarts");
  decompose->add_option("input", c.input, "Edge-list file")->required();
  decompose->add_option("output", c.output, "Decomposition JSON path")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "Recompute the exact residual cut norm of a decomposition");
  verify->add_option("input", c.input, "Edge-list file")->required();
  verify->add_option("decomposition", c.decomp_path, "Decomposition JSON")
      ->required();

  auto* maxcut = app.add_subcommand(
      "maxcut", "Additive eps*m approximation of the maximum cut");
  maxcut->add_option("--eps", c.epsilon, "Accuracy in multiples of m")
      ->required();
  maxcut->add_option("--seed", c.seed, "Random seed");
  maxcut->add_option("--budget", c.budget, "Max guess evaluations");
  maxcut->add_option("--gamma", c.gamma, "Target degree mass (default: sweep)");
  maxcut->add_option("--planted", c.planted_path,
                     "Vertex file; run the single guess read off this set");
  maxcut->add_option("--oracle", c.oracle, "exact|heuristic|auto");
  maxcut->add_option("--dump-partition", c.dump_partition_path,
                     "Write the heavy-vertex partition as JSON");
  maxcut->add_option("input", c.input, "Edge-list file")->required();

  auto* bisect = app.add_subcommand(
      "bisect", "Additive eps*m approximation of max/min bisection");
  bisect->add_option("--objective", c.objective, "max|min")->required();
  bisect->add_option("--eps", c.epsilon, "Accuracy in multiples of m")
      ->required();
  bisect->add_option("--seed", c.seed, "Random seed");
  bisect->add_option("--budget", c.budget, "Max guess evaluations");
  bisect->add_option("--oracle", c.oracle, "exact|heuristic|auto");
  bisect->add_option("--dump-partition", c.dump_partition_path,
                     "Write the heavy-vertex partition as JSON");
  bisect->add_option("input", c.input, "Edge-list file")->required();

  auto* bench = app.add_subcommand(
      "oracle-bench",
      "Compare the cut-norm heuristic against the exact oracle");
  bench->add_option("--instances", c.instances, "Corpus size");
  bench->add_option("--seed", c.seed, "Random seed");
  bench->add_option("--restarts", c.restarts, "Heuristic restarts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "{\"error\":\"" << json_escape(e.what()) << "\"}\n";
    return 1;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(c);
    if (decompose->parsed()) return cmd_decompose(c);
    if (verify->parsed()) return cmd_verify(c);
    if (maxcut->parsed()) return run_solver(c, false);
    if (bisect->parsed()) return run_solver(c, true);
    if (bench->parsed()) return cmd_oracle_bench(c);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << json_escape(e.what()) << "\"}\n";
    return 1;
  }
  return 1;
}
