#include "cutreg/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cutreg/rng.hpp"

namespace cutreg {

namespace {

constexpr std::uint64_t kDecomposeStream = 0xDEC0ull;
constexpr std::uint64_t kSweepStream = 0x53EEull;

struct BestSample {
  bool has = false;
  VertexSet s;
  double w = 0.0;
  double degree_mass = 0.0;
};

bool improves(Objective obj, double candidate, double incumbent) {
  return obj == Objective::maximize ? candidate > incumbent
                                    : candidate < incumbent;
}

// Candidate grid for one discretized coordinate: indices j such that the
// window [j*delta, (j+1)*delta] can intersect the achievable mass range
// [fixed, fixed + spread]. The planted guess always falls inside.
void coordinate_range(double fixed, double spread, double delta,
                      long long& lo, long long& hi) {
  lo = static_cast<long long>(std::ceil(fixed / delta - 1.0 - 1e-9));
  if (lo < 0) lo = 0;
  hi = static_cast<long long>(std::floor((fixed + spread) / delta + 1e-9));
  if (hi < lo) hi = lo;
}

}  // namespace

VertexSet round_sample(const PartitionScheme& scheme, const VertexSet& u_in_s,
                       const std::vector<double>& y, std::uint64_t seed,
                       std::uint64_t guess_index, std::uint64_t sample_index) {
  Rng rng(Rng::derive({seed, guess_index, sample_index}));
  VertexSet s = u_in_s;
  for (std::size_t j = 0; j < scheme.parts.size(); ++j) {
    if (rng.next_double() < y[j]) {
      scheme.parts[j].for_each([&](int v) { s.insert(v); });
    }
  }
  return s;
}

namespace {

class GuessSweep {
 public:
  GuessSweep(const Graph& g, const SolveRequest& req, const Decomposition& dec,
             const PartitionScheme& scheme)
      : g_(g), req_(req), dec_(dec), scheme_(scheme) {
    m_ = g.total_degree();
    window_ = req.size_window.value_or(req.epsilon * m_);
    samples_per_guess_ =
        static_cast<int>(std::ceil(10.0 / req.epsilon));
    closest_gap_ = std::numeric_limits<double>::infinity();
  }

  void try_guess(const GuessVector& guess) {
    LpInstance lp = build_lp(scheme_, guess, req_.gamma, req_.epsilon, dec_, g_);
    std::uint64_t guess_index = static_cast<std::uint64_t>(guesses_tried_);
    ++guesses_tried_;
    LpResult res = lp_feasible(lp);
    if (res.status != LpStatus::feasible) return;
    for (int si = 0; si < samples_per_guess_; ++si) {
      VertexSet s = round_sample(scheme_, guess.u_in_s, res.y, req_.seed,
                                 guess_index, static_cast<std::uint64_t>(si));
      double ds = subset_degree(g_, s);
      double gap = std::abs(ds - req_.gamma);
      closest_gap_ = std::min(closest_gap_, gap);
      if (gap > window_ + 1e-9) continue;
      double w = evaluate_w_cut(dec_, g_, s);
      if (!best_.has || improves(req_.objective, w, best_.w)) {
        best_.has = true;
        best_.s = std::move(s);
        best_.w = w;
        best_.degree_mass = ds;
      }
    }
  }

  bool budget_left() const { return guesses_tried_ < req_.budget; }
  long long guesses_tried() const { return guesses_tried_; }
  double closest_gap() const { return closest_gap_; }
  const BestSample& best() const { return best_; }

 private:
  const Graph& g_;
  const SolveRequest& req_;
  const Decomposition& dec_;
  const PartitionScheme& scheme_;
  double m_ = 0.0;
  double window_ = 0.0;
  int samples_per_guess_ = 0;
  long long guesses_tried_ = 0;
  double closest_gap_ = 0.0;
  BestSample best_;
};

}  // namespace

SolveResult solve(const Graph& g, const SolveRequest& req,
                  const Decomposition& dec) {
  double m = g.total_degree();
  if (!(req.epsilon > 0.0 && req.epsilon < 1.0)) {
    throw std::invalid_argument("solve: epsilon must be in (0, 1)");
  }
  if (req.gamma < -1e-9 || req.gamma > m + 1e-9) {
    throw std::invalid_argument("solve: gamma must lie in [0, m]");
  }
  if (req.budget < 1) throw std::invalid_argument("solve: budget must be >= 1");

  int sigma = dec.sigma();
  double delta = compute_delta(req.epsilon, sigma == 0 ? 1.0 : dec.alpha_max(),
                               sigma, m);
  PartitionScheme scheme = build_partition(g, dec, delta);

  GuessSweep sweep(g, req, dec, scheme);
  bool completed = false;

  if (req.planted) {
    if (req.planted->universe() != g.vertex_count()) {
      throw std::invalid_argument("solve: planted set universe mismatch");
    }
    sweep.try_guess(planted_guess(g, dec, scheme, *req.planted));
  } else {
    // Precompute per-cut part mass so candidate windows are cheap.
    std::vector<double> parts_in_s(sigma, 0.0), parts_in_t(sigma, 0.0);
    for (std::size_t j = 0; j < scheme.parts.size(); ++j) {
      for (int i = 0; i < sigma; ++i) {
        if (scheme.part_in_s[j][i]) parts_in_s[i] += scheme.part_degree[j];
        if (scheme.part_in_t[j][i]) parts_in_t[i] += scheme.part_degree[j];
      }
    }

    std::vector<int> heavy = scheme.u_set.indices();
    int hu = static_cast<int>(heavy.size());
    std::uint64_t mask_count =
        hu <= 62 ? (1ull << hu) : std::numeric_limits<std::uint64_t>::max();

    completed = true;
    for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
      if (!sweep.budget_left()) {
        completed = false;
        break;
      }
      GuessVector guess;
      guess.u_in_s = VertexSet(g.vertex_count());
      for (int b = 0; b < hu; ++b) {
        if ((mask >> b) & 1ull) guess.u_in_s.insert(heavy[b]);
      }
      VertexSet u_out_s = scheme.u_set.intersect(guess.u_in_s.complement());

      std::vector<long long> lo(2 * sigma), hi(2 * sigma), cur(2 * sigma);
      for (int i = 0; i < sigma; ++i) {
        coordinate_range(subset_degree(g, guess.u_in_s, dec.cuts[i].s),
                         parts_in_s[i], delta, lo[i], hi[i]);
        coordinate_range(subset_degree(g, u_out_s, dec.cuts[i].t),
                         parts_in_t[i], delta, lo[sigma + i], hi[sigma + i]);
      }
      cur = lo;

      bool more = true;
      while (more) {
        if (!sweep.budget_left()) {
          completed = false;
          break;
        }
        guess.s_tilde.assign(sigma, 0.0);
        guess.t_tilde.assign(sigma, 0.0);
        for (int i = 0; i < sigma; ++i) {
          guess.s_tilde[i] = static_cast<double>(cur[i]) * delta;
          guess.t_tilde[i] = static_cast<double>(cur[sigma + i]) * delta;
        }
        sweep.try_guess(guess);

        more = false;
        for (int pos = 2 * sigma - 1; pos >= 0; --pos) {
          if (cur[pos] < hi[pos]) {
            ++cur[pos];
            for (int q = pos + 1; q < 2 * sigma; ++q) cur[q] = lo[q];
            more = true;
            break;
          }
        }
      }
      if (!completed) break;
    }
  }

  if (!sweep.best().has) {
    double gap = sweep.closest_gap();
    std::string msg =
        std::isfinite(gap)
            ? "solve: no sample met the size window; closest |d(S) - Gamma| = " +
                  std::to_string(gap)
            : "solve: no feasible guess produced samples (" +
                  std::to_string(sweep.guesses_tried()) + " guesses tried)";
    throw SolveFailure(msg, gap, sweep.guesses_tried());
  }

  SolveResult out;
  out.s = sweep.best().s;
  out.cut_value_w = sweep.best().w;
  out.cut_value_a = cut_value(g, out.s);
  out.degree_mass = sweep.best().degree_mass;
  out.guesses_tried = sweep.guesses_tried();
  out.certified = completed && !req.planted;
  out.m = m;
  out.gamma = req.gamma;
  out.epsilon = req.epsilon;
  out.sigma = sigma;
  return out;
}

SolveResult solve(const Graph& g, const SolveRequest& req) {
  DecomposeOptions dopt;
  dopt.epsilon = req.epsilon / 4.0;
  dopt.oracle = req.oracle;
  dopt.seed = Rng::derive({req.seed, kDecomposeStream});
  Decomposition dec = decompose(g, dopt);
  return solve(g, req, dec);
}

SolveResult solve_maxcut_sweep(const Graph& g, double epsilon,
                               long long budget, std::uint64_t seed,
                               std::optional<OracleKind> oracle) {
  DecomposeOptions dopt;
  dopt.epsilon = epsilon / 4.0;
  dopt.oracle = oracle;
  dopt.seed = Rng::derive({seed, kDecomposeStream});
  return solve_maxcut_sweep(g, epsilon, budget, seed, decompose(g, dopt));
}

SolveResult solve_maxcut_sweep(const Graph& g, double epsilon,
                               long long budget, std::uint64_t seed,
                               const Decomposition& dec) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("solve_maxcut_sweep: epsilon must be in (0, 1)");
  }
  double m = g.total_degree();
  double step = 0.5 * epsilon * m;
  long long steps = static_cast<long long>(std::floor(m / step + 1e-9));

  std::optional<SolveResult> best;
  long long tried_total = 0;
  bool all_certified = true;
  double closest_gap = std::numeric_limits<double>::infinity();
  for (long long j = 0; j <= steps; ++j) {
    double gamma = std::min(static_cast<double>(j) * step, m);
    SolveRequest req;
    req.objective = Objective::maximize;
    req.gamma = gamma;
    req.epsilon = epsilon;
    req.budget = std::max<long long>(1, budget - tried_total);
    req.seed = Rng::derive({seed, kSweepStream, static_cast<std::uint64_t>(j)});
    req.size_window = 0.5 * epsilon * m;
    try {
      SolveResult r = solve(g, req, dec);
      tried_total += r.guesses_tried;
      all_certified = all_certified && r.certified;
      if (!best || r.cut_value_w > best->cut_value_w) best = std::move(r);
    } catch (const SolveFailure& f) {
      tried_total += f.guesses_tried;
      closest_gap = std::min(closest_gap, f.closest_gap);
    }
    if (tried_total >= budget) {
      all_certified = false;
      break;
    }
  }
  if (!best) {
    throw SolveFailure("solve_maxcut_sweep: no gamma produced a sample",
                       closest_gap);
  }
  best->guesses_tried = tried_total;
  best->certified = all_certified;
  return *best;
}

SolveResult solve_bisection(const Graph& g, double epsilon,
                            Objective objective, long long budget,
                            std::uint64_t seed,
                            std::optional<OracleKind> oracle) {
  SolveRequest req;
  req.objective = objective;
  req.gamma = g.total_degree() / 2.0;
  req.epsilon = epsilon;
  req.budget = budget;
  req.seed = seed;
  req.oracle = oracle;
  return solve(g, req);
}

std::pair<VertexSet, double> brute_force_best_cut(const Graph& g, double gamma,
                                                  double tol,
                                                  Objective objective) {
  int n = g.vertex_count();
  if (n > 20) {
    throw std::invalid_argument("brute_force_best_cut: n > 20 refused");
  }
  const Matrix& a = g.adjacency();

  // Gray-code walk; cut value and degree mass are updated per vertex toggle.
  std::vector<double> row_in(n, 0.0);
  std::vector<char> in_set(n, 0);
  double cut = 0.0, ds = 0.0;

  bool has_best = false;
  std::uint64_t best_mask = 0;
  double best_value = 0.0;

  auto consider = [&](std::uint64_t mask) {
    if (std::abs(ds - gamma) > tol + 1e-9) return;
    if (!has_best || improves(objective, cut, best_value)) {
      has_best = true;
      best_mask = mask;
      best_value = cut;
    }
  };

  consider(0);
  std::uint64_t mask = 0;
  std::uint64_t total = 1ull << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int u = std::countr_zero(i);
    if (!in_set[u]) {
      cut += g.degree(u) - 2.0 * row_in[u];
      ds += g.degree(u);
      in_set[u] = 1;
      mask |= 1ull << u;
      for (int v = 0; v < n; ++v) row_in[v] += a(u, v);
    } else {
      for (int v = 0; v < n; ++v) row_in[v] -= a(u, v);
      cut -= g.degree(u) - 2.0 * row_in[u];
      ds -= g.degree(u);
      in_set[u] = 0;
      mask &= ~(1ull << u);
    }
    consider(mask);
  }

  if (!has_best) {
    throw SolveFailure("brute_force_best_cut: no subset matches the size window",
                       std::numeric_limits<double>::infinity());
  }
  VertexSet s = VertexSet::from_mask(n, best_mask);
  return {s, cut_value(g, s)};
}

}  // namespace cutreg
