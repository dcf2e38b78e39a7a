#include "cutreg/regularity.hpp"

#include <cmath>
#include <stdexcept>

#include "cutreg/rng.hpp"
#include "cutreg/spectral.hpp"

namespace cutreg {

namespace {

// h^2(R) = ||D^{-1/2} R D^{-1/2}||_F^2, computed from scratch.
double potential_sq(const Matrix& r, const std::vector<double>& degree) {
  double sq = 0.0;
  int n = r.rows();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      double e = r(u, v);
      if (e != 0.0) sq += e * e / (degree[u] * degree[v]);
    }
  }
  return sq;
}

}  // namespace

double Decomposition::alpha_max() const {
  double best = 0.0;
  for (const auto& c : cuts) best = std::max(best, std::abs(c.alpha));
  return best;
}

Decomposition decompose(const Graph& g, const DecomposeOptions& opt) {
  if (!(opt.epsilon > 0.0 && opt.epsilon < 2.0)) {
    throw std::invalid_argument("decompose: epsilon must be in (0, 2)");
  }
  int n = g.vertex_count();
  OracleKind oracle = opt.oracle.value_or(
      n <= opt.exact_cap ? OracleKind::exact : OracleKind::heuristic);
  if (oracle == OracleKind::exact && n > opt.exact_cap) {
    throw std::invalid_argument(
        "decompose: exact oracle refused for n > " +
        std::to_string(opt.exact_cap));
  }

  double eps = opt.epsilon;
  double delta = eps / 2.0;
  double m = g.total_degree();

  Spectrum spec = eig_sym(normalized_adjacency(g));
  ThresholdData td = threshold_rank(spec, delta);
  double k = td.k;
  if (!(k > 0.0)) {
    // lambda = 1 survives any delta < 1 for m > 0.
    throw std::logic_error("decompose: threshold rank vanished");
  }
  Matrix residual = low_rank_b(g, spec, delta);

  Decomposition dec;
  dec.epsilon = eps;
  dec.k = k;

  double eps_prime = eps / std::sqrt(4.0 * k);
  double h_sq = potential_sq(residual, g.degrees());
  dec.h_b = std::sqrt(h_sq);

  bool standard = opt.mode == DecomposeMode::standard;
  long long cap = static_cast<long long>(
      std::ceil((standard ? 16.0 : 4.0) * k / (eps * eps)));
  double stop_threshold =
      oracle == OracleKind::exact ? 0.5 * eps * m : 0.25 * eps * m;

  for (long long iter = 0; iter < cap; ++iter) {
    CutWitness w =
        oracle == OracleKind::exact
            ? cutnorm_exact(residual, opt.exact_cap)
            : cutnorm_heuristic(
                  residual, opt.restarts,
                  Rng::derive({opt.seed, static_cast<std::uint64_t>(iter)}));
    dec.last_witness_value = w.value;
    bool below = oracle == OracleKind::exact ? w.value <= stop_threshold
                                             : w.value < stop_threshold;
    if (below) break;

    double rst = rect_sum(residual, w.s, w.t);
    double ds = subset_degree(g, w.s);
    double dt = subset_degree(g, w.t);
    if (!standard &&
        std::abs(rst) <= eps_prime * dec.h_b * std::sqrt(ds * dt)) {
      break;
    }
    double alpha = standard ? rst / (m * m) : rst / (ds * dt);

    w.s.for_each([&](int u) {
      double du = g.degree(u);
      w.t.for_each(
          [&](int v) { residual(u, v) -= alpha * du * g.degree(v); });
    });

    double h_sq_new = potential_sq(residual, g.degrees());
    double drop = h_sq - h_sq_new;
    double predicted = 2.0 * alpha * rst - alpha * alpha * ds * dt;
    if (std::abs(drop - predicted) > 1e-6 * (1.0 + std::abs(predicted))) {
      throw std::logic_error("decompose: potential identity violated");
    }
    if (standard && std::abs(alpha) > std::sqrt(k) / m + 1e-12) {
      throw std::logic_error("decompose: coefficient bound violated");
    }
    h_sq = h_sq_new;

    dec.cuts.push_back({w.s, w.t, alpha});
    IterationRecord rec;
    rec.rst = rst;
    rec.alpha = alpha;
    rec.ds = ds;
    rec.dt = dt;
    rec.potential = std::sqrt(std::max(h_sq, 0.0));
    rec.potential_sq_drop = drop;
    dec.trace.push_back(rec);
  }

  if (n <= opt.exact_cap) {
    dec.certified_residual = residual_cutnorm_certificate(g, dec, opt.exact_cap);
    dec.uncertified = false;
  } else {
    dec.certified_residual = std::nullopt;
    dec.uncertified = true;
  }
  return dec;
}

double evaluate_w_cut(const Decomposition& d, const Graph& g,
                      const VertexSet& s) {
  VertexSet s_bar = s.complement();
  double total = 0.0;
  for (const auto& c : d.cuts) {
    total += c.alpha * subset_degree(g, s, c.s) * subset_degree(g, s_bar, c.t);
  }
  return total;
}

Matrix residual_matrix(const Graph& g, const Decomposition& d) {
  Matrix r = g.adjacency();
  for (const auto& c : d.cuts) {
    c.s.for_each([&](int u) {
      double du = g.degree(u);
      c.t.for_each([&](int v) { r(u, v) -= c.alpha * du * g.degree(v); });
    });
  }
  return r;
}

double residual_cutnorm_certificate(const Graph& g, const Decomposition& d,
                                    int n_cap) {
  if (g.vertex_count() > n_cap) {
    throw std::invalid_argument(
        "residual_cutnorm_certificate: n exceeds exact-oracle cap");
  }
  return cutnorm_exact(residual_matrix(g, d), n_cap).value;
}

}  // namespace cutreg
