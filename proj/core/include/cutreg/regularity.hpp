#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutreg/cutnorm.hpp"
#include "cutreg/graph.hpp"
#include "cutreg/matrix.hpp"

namespace cutreg {

/// CUT(S, T, alpha): entry (u, v) is alpha * d(u) * d(v) for u in S, v in T,
/// zero elsewhere. Not necessarily symmetric.
struct CutMatrix {
  VertexSet s;
  VertexSet t;
  double alpha = 0.0;
};

enum class OracleKind { exact, heuristic };

enum class DecomposeMode {
  /// alpha = R(S,T) / m^2; coefficient bound |alpha| <= sqrt(k)/m and at most
  /// ceil(16 k / eps^2) cut matrices.
  standard,
  /// alpha = R(S,T) / (d(S) d(T)); the accept threshold is relative to
  /// sqrt(d(S) d(T)). Kept for property tests of the potential argument.
  proposition,
};

struct DecomposeOptions {
  double epsilon = 0.5;          // target residual eps * m, 0 < eps < 2
  std::optional<OracleKind> oracle;  // default: exact when n <= exact_cap
  DecomposeMode mode = DecomposeMode::standard;
  std::uint64_t seed = 0;
  int restarts = 50;             // heuristic oracle restarts
  int exact_cap = 16;            // max n for the exact oracle / certification
};

/// One accepted iteration of the decomposition loop.
struct IterationRecord {
  double rst = 0.0;        // signed R(S, T) at selection time
  double alpha = 0.0;
  double ds = 0.0;         // d(S)
  double dt = 0.0;         // d(T)
  double potential = 0.0;  // h(R) after subtracting this cut
  double potential_sq_drop = 0.0;  // h^2 before minus h^2 after
};

struct Decomposition {
  std::vector<CutMatrix> cuts;
  double epsilon = 0.0;
  double k = 0.0;        // sum-squares threshold rank at delta = eps/2
  double h_b = 0.0;      // initial potential h(B)
  std::optional<double> certified_residual;  // exact ||A - sum W||_C, small n
  bool uncertified = false;  // heuristic stalled and n too large to certify
  double last_witness_value = 0.0;
  std::vector<IterationRecord> trace;

  int sigma() const { return static_cast<int>(cuts.size()); }
  double alpha_max() const;
};

/// Constructive weak regularity decomposition: writes A as a sum of at most
/// ceil(16 k / eps^2) cut matrices whose residual has cut norm at most
/// eps * m, where k is the sum-squares threshold rank at eps/2. The loop
/// peels B = D^{1/2} T_{eps/2} D^{1/2} by repeatedly subtracting the cut
/// matrix the oracle points at, and stops once the oracle value drops below
/// the progress threshold. With the exact oracle the result always carries an
/// exact residual certificate.
Decomposition decompose(const Graph& g, const DecomposeOptions& opt);

/// W(S, \bar S) = sum_i alpha_i d(S ∩ S_i) d(\bar S ∩ T_i), in O(sigma * n).
double evaluate_w_cut(const Decomposition& d, const Graph& g,
                      const VertexSet& s);

/// Dense A - sum of cut matrices.
Matrix residual_matrix(const Graph& g, const Decomposition& d);

/// Exact ||A - sum W||_C via the enumeration oracle. Refuses n > n_cap.
double residual_cutnorm_certificate(const Graph& g, const Decomposition& d,
                                    int n_cap = 16);

/// Serialized form: {"epsilon":..., "k":..., "cuts":[{"S":[...], "T":[...],
/// "alpha":...}, ...], "certified_residual": number|null}. Doubles are
/// emitted with 17 significant digits so output is reproducible and
/// round-trips exactly.
std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text, int n);

}  // namespace cutreg
