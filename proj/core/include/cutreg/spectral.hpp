#pragma once

#include <stdexcept>
#include <vector>

#include "cutreg/graph.hpp"
#include "cutreg/matrix.hpp"

namespace cutreg {

/// Full eigendecomposition of a symmetric matrix. Eigenvalues are sorted in
/// descending order; eigenvector i is column i of `eigenvectors` and the
/// columns are orthonormal. Vector signs are canonicalized (the entry of
/// largest magnitude is made positive) so results are reproducible.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

/// Thrown when the Jacobi sweep cap is hit before the off-diagonal mass
/// dropped below tolerance.
class EigFailure : public std::runtime_error {
 public:
  EigFailure(const std::string& msg, double residual)
      : std::runtime_error(msg), offdiag_residual(residual) {}
  double offdiag_residual;
};

/// Cyclic Jacobi eigensolver for symmetric matrices. Converges when the
/// off-diagonal Frobenius mass falls below tol * (1 + ||M||_F).
Spectrum eig_sym(const Matrix& m, int max_sweeps = 100, double tol = 1e-10);

/// Sum-squares threshold rank data at threshold delta: k is the sum of
/// lambda_i^2 over eigenvalues with |lambda_i| > delta.
struct ThresholdData {
  double delta = 0.0;
  double k = 0.0;
  std::vector<int> kept_indices;
};

/// Strict inequality |lambda| > delta; eigenvalues within 1e-12 of delta
/// count as below it (ties break toward the smaller rank).
ThresholdData threshold_rank(const Spectrum& spec, double delta);

/// B = D^{1/2} T_delta D^{1/2}, where T_delta keeps the eigenpairs of the
/// normalized adjacency with |lambda| > delta. Symmetric, rank at most the
/// number of kept indices. Every cut of the graph is reproduced by B within
/// an additive delta * m.
Matrix low_rank_b(const Graph& g, const Spectrum& spec, double delta);

}  // namespace cutreg
