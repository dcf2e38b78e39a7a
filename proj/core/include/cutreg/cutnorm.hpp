#pragma once

#include <cstdint>

#include "cutreg/matrix.hpp"
#include "cutreg/vertex_set.hpp"

namespace cutreg {

/// A witness (S, T) for the cut norm of a matrix together with |M(S, T)|.
/// Witnesses are self-certifying: `value` is recomputed from the sets before
/// being returned, so it is always a valid lower bound on ||M||_C.
struct CutWitness {
  VertexSet s;
  VertexSet t;
  double value = 0.0;
};

/// M(S, T) = sum of M(u, v) over u in S, v in T.
double rect_sum(const Matrix& m, const VertexSet& s, const VertexSet& t);

/// Exact cut norm by enumeration of all 2^n row sets; for a fixed S the
/// optimal T is read off the column-sum signs. Refuses n > n_cap.
CutWitness cutnorm_exact(const Matrix& m, int n_cap = 16);

/// Local-search lower bound: per restart, a random S and sign, then
/// alternating closed-form best-T-given-S / best-S-given-T steps until no
/// improvement (capped at 1000 steps). One extra restart starts from the top
/// singular vector's sign pattern. Deterministic for a given (restarts, seed);
/// ties between restarts keep the earliest witness.
CutWitness cutnorm_heuristic(const Matrix& m, int restarts = 50,
                             std::uint64_t seed = 0);

}  // namespace cutreg
