#include "cutreg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cutreg {

namespace {

double offdiag_mass(const Matrix& a) {
  double sq = 0.0;
  int n = a.rows();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q) sq += a(p, q) * a(p, q);
  return std::sqrt(sq);
}

}  // namespace

Spectrum eig_sym(const Matrix& m, int max_sweeps, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_sym: not square");
  if (!is_symmetric(m, 1e-12)) {
    throw std::invalid_argument("eig_sym: matrix is not symmetric");
  }
  int n = m.rows();
  Matrix a = m;
  Matrix v = Matrix::identity(n);
  double threshold = tol * (1.0 + frobenius_norm(m));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_mass(a) <= threshold) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(p, i) = a(i, p);
          a(i, q) = c * aiq + s * aip;
          a(q, i) = a(i, q);
        }
        for (int i = 0; i < n; ++i) {
          double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = c * viq + s * vip;
        }
      }
    }
  }

  double residual = offdiag_mass(a);
  if (residual > threshold) {
    throw EigFailure("eig_sym: no convergence after " +
                         std::to_string(max_sweeps) +
                         " sweeps; off-diagonal mass " +
                         std::to_string(residual),
                     residual);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  Spectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors = Matrix(n, n);
  for (int col = 0; col < n; ++col) {
    int src = order[col];
    spec.eigenvalues[col] = a(src, src);
    // Canonical sign: largest-magnitude entry positive.
    int pivot = 0;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > best) {
        best = std::abs(v(i, src));
        pivot = i;
      }
    }
    double sign = v(pivot, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) spec.eigenvectors(i, col) = sign * v(i, src);
  }
  return spec;
}

ThresholdData threshold_rank(const Spectrum& spec, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("threshold_rank: delta must be in (0, 1)");
  }
  ThresholdData out;
  out.delta = delta;
  for (int i = 0; i < static_cast<int>(spec.eigenvalues.size()); ++i) {
    double lam = spec.eigenvalues[i];
    if (std::abs(lam) - delta > 1e-12) {
      out.kept_indices.push_back(i);
      out.k += lam * lam;
    }
  }
  return out;
}

Matrix low_rank_b(const Graph& g, const Spectrum& spec, double delta) {
  ThresholdData td = threshold_rank(spec, delta);
  int n = g.vertex_count();
  std::vector<double> sqrt_deg(n);
  for (int v = 0; v < n; ++v) sqrt_deg[v] = std::sqrt(g.degree(v));
  Matrix b(n, n);
  for (int idx : td.kept_indices) {
    double lam = spec.eigenvalues[idx];
    for (int u = 0; u < n; ++u) {
      double fu = spec.eigenvectors(u, idx);
      if (fu == 0.0) continue;
      for (int v = 0; v < n; ++v) {
        b(u, v) +=
            lam * fu * spec.eigenvectors(v, idx) * sqrt_deg[u] * sqrt_deg[v];
      }
    }
  }
  return b;
}

}  // namespace cutreg
