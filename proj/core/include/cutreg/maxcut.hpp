#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "cutreg/graph.hpp"
#include "cutreg/partition_lp.hpp"
#include "cutreg/regularity.hpp"

namespace cutreg {

enum class Objective { maximize, minimize };

struct SolveRequest {
  Objective objective = Objective::maximize;
  double gamma = 0.0;    // target degree mass of S
  double epsilon = 0.5;  // additive accuracy, in multiples of m; (0, 1)
  long long budget = 1'000'000;  // max (guess x LP) evaluations
  std::optional<VertexSet> planted;  // when set: single guess read off S*
  std::uint64_t seed = 0;
  std::optional<OracleKind> oracle;  // forwarded to the decomposition
  // Samples count toward the result only if |d(S) - gamma| <= size_window.
  // Defaults to eps * m; the max-cut sweep tightens it to eps * m / 2.
  std::optional<double> size_window;
};

struct SolveResult {
  VertexSet s;
  double cut_value_a = 0.0;  // A(S, \bar S), the headline value
  double cut_value_w = 0.0;  // W(S, \bar S) used for selection
  double degree_mass = 0.0;  // d(S)
  long long guesses_tried = 0;
  bool certified = false;  // full guess enumeration completed within budget
  double m = 0.0;
  double gamma = 0.0;
  double epsilon = 0.0;
  int sigma = 0;
};

/// Thrown when no sample lands inside the size window. Carries the closest
/// achieved |d(S) - gamma| (infinity when no guess was feasible at all) and
/// the number of guesses that were evaluated before giving up.
class SolveFailure : public std::runtime_error {
 public:
  SolveFailure(const std::string& msg, double gap, long long tried = 0)
      : std::runtime_error(msg), closest_gap(gap), guesses_tried(tried) {}
  double closest_gap;
  long long guesses_tried;
};

/// Approximates the best cut (S, \bar S) with d(S) close to gamma:
/// decomposes A at accuracy eps/4, discretizes degree masses, enumerates
/// guesses (or takes the single planted guess), solves the feasibility
/// program per guess, rounds each feasible solution ceil(10/eps) times, and
/// returns the in-window sample with the best W(S, \bar S).
SolveResult solve(const Graph& g, const SolveRequest& req);

/// Same, reusing an existing decomposition (it must have been produced at
/// accuracy req.epsilon / 4).
SolveResult solve(const Graph& g, const SolveRequest& req,
                  const Decomposition& dec);

/// Max cut via a sweep of gamma over multiples of eps*m/2 in [0, m], with the
/// sample window tightened to eps*m/2 so the total size error against any
/// optimum stays within eps*m.
SolveResult solve_maxcut_sweep(const Graph& g, double epsilon,
                               long long budget = 1'000'000,
                               std::uint64_t seed = 0,
                               std::optional<OracleKind> oracle = {});
SolveResult solve_maxcut_sweep(const Graph& g, double epsilon,
                               long long budget, std::uint64_t seed,
                               const Decomposition& dec);

/// Max or min bisection: solve with gamma = m / 2.
SolveResult solve_bisection(const Graph& g, double epsilon,
                            Objective objective,
                            long long budget = 1'000'000,
                            std::uint64_t seed = 0,
                            std::optional<OracleKind> oracle = {});

/// Exact optimum of A(S, \bar S) over all S with |d(S) - gamma| <= tol, by
/// full enumeration. Refuses n > 20.
std::pair<VertexSet, double> brute_force_best_cut(const Graph& g, double gamma,
                                                  double tol,
                                                  Objective objective);

/// One independent rounding: the heavy vertices in u_in_s plus each part P
/// with probability y[P]. Randomness is keyed by (seed, guess, sample), so
/// samples are reproducible regardless of evaluation order.
VertexSet round_sample(const PartitionScheme& scheme, const VertexSet& u_in_s,
                       const std::vector<double>& y, std::uint64_t seed,
                       std::uint64_t guess_index, std::uint64_t sample_index);

}  // namespace cutreg
