#pragma once

#include <string>
#include <vector>

#include "cutreg/graph.hpp"
#include "cutreg/regularity.hpp"
#include "cutreg/vertex_set.hpp"

namespace cutreg {

/// Heavy vertices plus the coarsest partition of the rest that refines every
/// S_i and T_i of a decomposition, with per-part degree at most delta_step.
struct PartitionScheme {
  VertexSet u_set;        // heavy vertices, d(v) >= delta_step
  double delta_step = 0;  // degree-mass discretization step
  std::vector<VertexSet> parts;       // disjoint cover of V \ U
  std::vector<double> part_degree;    // d(P) per part
  std::vector<std::vector<bool>> part_in_s;  // [part][i]: P ⊆ S_i
  std::vector<std::vector<bool>> part_in_t;  // [part][i]: P ⊆ T_i
};

/// Discretization step: floor(eps / (48 * alpha_max * sigma)), clamped below
/// by m * 1e-9 so downstream divisions stay defined. sigma == 0 yields m
/// (no discretization needed).
double compute_delta(double epsilon, double alpha_max, int sigma, double m);

/// U = {v : d(v) >= delta_step}; the remaining vertices are grouped by their
/// membership signature in (S_1..S_sigma, T_1..T_sigma) and each group is
/// split first-fit by ascending vertex index into chunks of degree at most
/// delta_step.
PartitionScheme build_partition(const Graph& g, const Decomposition& d,
                                double delta_step);

/// Discretized guess driving the feasibility program: target degree masses
/// for each S_i and T_i (multiples of delta_step) plus the heavy vertices
/// assigned to the S side.
struct GuessVector {
  std::vector<double> s_tilde;
  std::vector<double> t_tilde;
  VertexSet u_in_s;
};

/// Reads the guess off a known set: s~_i = Delta * floor(d(S_i ∩ S*)/Delta),
/// t~_i likewise from the complement, heavy side from S* ∩ U.
GuessVector planted_guess(const Graph& g, const Decomposition& d,
                          const PartitionScheme& scheme,
                          const VertexSet& s_star);

/// Two-sided row lo <= coeff . y <= hi over the part variables.
struct LpRow {
  std::vector<double> coeff;
  double lo = 0.0;
  double hi = 0.0;
};

/// Feasibility program over y_P in [0, 1]: one size row (Gamma ± eps m / 2)
/// plus, per cut index i, a width-Delta row for the S_i mass and one for the
/// T_i mass (the latter via 1 - y_P and the heavy vertices outside u_in_s).
struct LpInstance {
  int num_vars = 0;
  std::vector<LpRow> rows;
};

LpInstance build_lp(const PartitionScheme& scheme, const GuessVector& guess,
                    double gamma, double epsilon, const Decomposition& d,
                    const Graph& g);

enum class LpStatus { feasible, infeasible, stalled };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> y;  // valid when status == feasible
};

/// Phase-1 bounded-variable simplex with Bland's rule. Returns an assignment
/// satisfying every row within 1e-7, "infeasible", or "stalled" when the
/// pivot cap was hit (reported distinctly, never conflated with infeasible).
LpResult lp_feasible(const LpInstance& lp);

/// Row-by-row re-verification of an assignment.
bool lp_check(const LpInstance& lp, const std::vector<double>& y,
              double tol = 1e-7);

/// Debug dump of a partition scheme as JSON.
std::string partition_to_json(const PartitionScheme& scheme);

}  // namespace cutreg
