#include "cutreg/partition_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace cutreg {

double compute_delta(double epsilon, double alpha_max, int sigma, double m) {
  if (sigma == 0) return m;
  if (!(alpha_max > 0.0)) {
    throw std::invalid_argument("compute_delta: alpha_max must be positive");
  }
  double raw = std::floor(epsilon / (48.0 * alpha_max * sigma));
  double delta_min = m * 1e-9;
  return std::max(raw, delta_min);
}

PartitionScheme build_partition(const Graph& g, const Decomposition& d,
                                double delta_step) {
  if (!(delta_step > 0.0)) {
    throw std::invalid_argument("build_partition: delta_step must be positive");
  }
  int n = g.vertex_count();
  int sigma = d.sigma();

  PartitionScheme scheme;
  scheme.delta_step = delta_step;
  scheme.u_set = VertexSet(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= delta_step) scheme.u_set.insert(v);
  }

  // Group light vertices by their 2*sigma membership signature, preserving
  // first-appearance order so the layout is deterministic.
  std::vector<std::vector<bool>> signatures;
  std::vector<std::vector<int>> members;
  std::map<std::vector<bool>, int> index_of;
  for (int v = 0; v < n; ++v) {
    if (scheme.u_set.contains(v)) continue;
    std::vector<bool> sig(2 * sigma);
    for (int i = 0; i < sigma; ++i) {
      sig[i] = d.cuts[i].s.contains(v);
      sig[sigma + i] = d.cuts[i].t.contains(v);
    }
    auto [it, inserted] = index_of.try_emplace(sig, signatures.size());
    if (inserted) {
      signatures.push_back(sig);
      members.emplace_back();
    }
    members[it->second].push_back(v);
  }

  // First-fit split by ascending vertex index; every light vertex has
  // degree < delta_step, so each chunk starts valid.
  for (std::size_t cls = 0; cls < members.size(); ++cls) {
    VertexSet chunk(n);
    double chunk_deg = 0.0;
    auto flush = [&]() {
      if (chunk.empty()) return;
      scheme.parts.push_back(chunk);
      scheme.part_degree.push_back(chunk_deg);
      std::vector<bool> in_s(sigma), in_t(sigma);
      for (int i = 0; i < sigma; ++i) {
        in_s[i] = signatures[cls][i];
        in_t[i] = signatures[cls][sigma + i];
      }
      scheme.part_in_s.push_back(std::move(in_s));
      scheme.part_in_t.push_back(std::move(in_t));
      chunk = VertexSet(n);
      chunk_deg = 0.0;
    };
    for (int v : members[cls]) {
      if (!chunk.empty() && chunk_deg + g.degree(v) > delta_step) flush();
      chunk.insert(v);
      chunk_deg += g.degree(v);
    }
    flush();
  }
  return scheme;
}

GuessVector planted_guess(const Graph& g, const Decomposition& d,
                          const PartitionScheme& scheme,
                          const VertexSet& s_star) {
  double delta = scheme.delta_step;
  GuessVector guess;
  guess.u_in_s = s_star.intersect(scheme.u_set);
  VertexSet s_bar = s_star.complement();
  for (const auto& c : d.cuts) {
    double s_true = subset_degree(g, c.s, s_star);
    double t_true = subset_degree(g, c.t, s_bar);
    guess.s_tilde.push_back(delta * std::floor(s_true / delta + 1e-9));
    guess.t_tilde.push_back(delta * std::floor(t_true / delta + 1e-9));
  }
  return guess;
}

LpInstance build_lp(const PartitionScheme& scheme, const GuessVector& guess,
                    double gamma, double epsilon, const Decomposition& d,
                    const Graph& g) {
  int sigma = d.sigma();
  if (static_cast<int>(guess.s_tilde.size()) != sigma ||
      static_cast<int>(guess.t_tilde.size()) != sigma) {
    throw std::invalid_argument(
        "build_lp: guess must carry one entry per cut matrix");
  }
  int p = static_cast<int>(scheme.parts.size());
  double m = g.total_degree();
  double delta = scheme.delta_step;

  LpInstance lp;
  lp.num_vars = p;

  double d_u_in_s = subset_degree(g, guess.u_in_s);
  LpRow size_row;
  size_row.coeff = scheme.part_degree;
  size_row.lo = gamma - 0.5 * epsilon * m - d_u_in_s;
  size_row.hi = gamma + 0.5 * epsilon * m - d_u_in_s;
  lp.rows.push_back(std::move(size_row));

  VertexSet u_out_s = scheme.u_set.intersect(guess.u_in_s.complement());
  for (int i = 0; i < sigma; ++i) {
    LpRow row;
    row.coeff.assign(p, 0.0);
    for (int j = 0; j < p; ++j) {
      if (scheme.part_in_s[j][i]) row.coeff[j] = scheme.part_degree[j];
    }
    double fixed = subset_degree(g, guess.u_in_s, d.cuts[i].s);
    row.lo = guess.s_tilde[i] - fixed;
    row.hi = guess.s_tilde[i] + delta - fixed;
    lp.rows.push_back(std::move(row));
  }
  for (int i = 0; i < sigma; ++i) {
    // t-side row uses (1 - y_P); rewritten over y_P with flipped bounds.
    LpRow row;
    row.coeff.assign(p, 0.0);
    double parts_total = 0.0;
    for (int j = 0; j < p; ++j) {
      if (scheme.part_in_t[j][i]) {
        row.coeff[j] = scheme.part_degree[j];
        parts_total += scheme.part_degree[j];
      }
    }
    double fixed = subset_degree(g, u_out_s, d.cuts[i].t);
    row.lo = parts_total + fixed - guess.t_tilde[i] - delta;
    row.hi = parts_total + fixed - guess.t_tilde[i];
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

bool lp_check(const LpInstance& lp, const std::vector<double>& y, double tol) {
  if (static_cast<int>(y.size()) != lp.num_vars) return false;
  for (double v : y) {
    if (v < -tol || v > 1.0 + tol) return false;
  }
  for (const auto& row : lp.rows) {
    double acc = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) acc += row.coeff[j] * y[j];
    if (acc < row.lo - tol || acc > row.hi + tol) return false;
  }
  return true;
}

std::string partition_to_json(const PartitionScheme& scheme) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", scheme.delta_step);
  std::string out = "{\"delta\":";
  out += buf;
  out += ",\"U\":[";
  bool first = true;
  scheme.u_set.for_each([&](int v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  out += "],\"parts\":[";
  for (std::size_t j = 0; j < scheme.parts.size(); ++j) {
    if (j) out += ',';
    out += '[';
    first = true;
    scheme.parts[j].for_each([&](int v) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(v);
    });
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace cutreg
