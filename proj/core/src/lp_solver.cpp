#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cutreg/partition_lp.hpp"

namespace cutreg {

// Phase-1 simplex over bounded variables. Each two-sided row
// lo <= a.y <= hi becomes the equation a.y - s = lo with slack s in
// [0, hi - lo]. Rows whose window does not contain the origin start with an
// artificial variable carrying the infeasibility; the simplex minimizes the
// artificial total with Bland's entering rule, which cannot cycle. A pivot
// cap guards numerical stalls and is reported apart from infeasibility.
LpResult lp_feasible(const LpInstance& lp) {
  constexpr double kRcTol = 1e-9;
  constexpr double kPivTol = 1e-11;
  const double inf = std::numeric_limits<double>::infinity();

  int p = lp.num_vars;

  // Interval pre-analysis over the box [0,1]^p. A row whose window cannot
  // meet the achievable range even at the verification tolerance proves the
  // whole program infeasible; a row that holds over the entire box imposes
  // nothing and is dropped before the simplex. With no variables this
  // resolves every row, which is the hot path of the guess sweep.
  std::vector<const LpRow*> active;
  for (const auto& row : lp.rows) {
    if (row.lo > row.hi + 1e-12) return {LpStatus::infeasible, {}};
    double reach_lo = 0.0, reach_hi = 0.0;
    for (double a : row.coeff) {
      if (a > 0.0)
        reach_hi += a;
      else
        reach_lo += a;
    }
    if (row.lo > reach_hi + 1e-7 || row.hi < reach_lo - 1e-7) {
      return {LpStatus::infeasible, {}};
    }
    if (row.lo <= reach_lo && reach_hi <= row.hi) continue;  // vacuous
    active.push_back(&row);
  }

  int r = static_cast<int>(active.size());
  if (r == 0) {
    std::vector<double> y(p, 0.0);
    if (!lp_check(lp, y, 1e-7)) return {LpStatus::stalled, {}};
    return {LpStatus::feasible, std::move(y)};
  }

  // Column layout: y variables, then one slack per row, then artificials.
  std::vector<int> art_col(r, -1);
  int num_art = 0;
  for (int j = 0; j < r; ++j) {
    if (!(active[j]->lo <= 0.0 && 0.0 <= active[j]->hi)) {
      art_col[j] = p + r + num_art++;
    }
  }
  int total = p + r + num_art;

  std::vector<double> lower(total, 0.0), upper(total, 0.0);
  for (int j = 0; j < p; ++j) upper[j] = 1.0;
  for (int j = 0; j < r; ++j) upper[p + j] = active[j]->hi - active[j]->lo;
  for (int j = p + r; j < total; ++j) upper[j] = inf;

  std::vector<double> cost(total, 0.0);
  for (int j = p + r; j < total; ++j) cost[j] = 1.0;

  std::vector<std::vector<double>> tab(r, std::vector<double>(total, 0.0));
  std::vector<int> basis(r);
  std::vector<double> xval(total, 0.0);
  std::vector<char> at_upper(total, 0);

  for (int j = 0; j < r; ++j) {
    double sgn = art_col[j] >= 0 && active[j]->lo < 0.0 ? -1.0 : 1.0;
    // Row as stored: coeff.y - slack (+ sgn * art) = lo. Scale so the basic
    // column is +1.
    double scale;
    if (art_col[j] >= 0) {
      scale = 1.0 / sgn;
      basis[j] = art_col[j];
      xval[art_col[j]] = std::abs(active[j]->lo);
    } else {
      scale = -1.0;  // slack column is -1 before scaling
      basis[j] = p + j;
      xval[p + j] = -active[j]->lo;
    }
    for (int c = 0; c < p; ++c) tab[j][c] = scale * active[j]->coeff[c];
    tab[j][p + j] = scale * -1.0;
    if (art_col[j] >= 0) tab[j][art_col[j]] = scale * sgn;
  }

  double scale_hint = 1.0;
  for (const LpRow* row : active) {
    scale_hint = std::max(scale_hint, std::abs(row->lo));
  }

  long long cap = 2000 + 200LL * (total + r);
  for (long long iter = 0; iter < cap; ++iter) {
    std::vector<char> is_basic(total, 0);
    for (int j = 0; j < r; ++j) is_basic[basis[j]] = 1;

    // Reduced costs under the artificial objective.
    int entering = -1;
    double dir = 0.0;
    for (int c = 0; c < total && entering < 0; ++c) {
      if (is_basic[c]) continue;
      if (upper[c] - lower[c] <= 0.0) continue;
      double z = cost[c];
      for (int j = 0; j < r; ++j) {
        if (cost[basis[j]] != 0.0) z -= cost[basis[j]] * tab[j][c];
      }
      if (!at_upper[c] && z < -kRcTol) {
        entering = c;
        dir = 1.0;
      } else if (at_upper[c] && z > kRcTol) {
        entering = c;
        dir = -1.0;
      }
    }

    if (entering < 0) {
      double art_total = 0.0;
      for (int j = p + r; j < total; ++j) art_total += xval[j];
      if (art_total > 1e-8 * (1.0 + scale_hint)) {
        return {LpStatus::infeasible, {}};
      }
      std::vector<double> y(xval.begin(), xval.begin() + p);
      for (double& v : y) v = std::clamp(v, 0.0, 1.0);
      if (!lp_check(lp, y, 1e-7)) return {LpStatus::stalled, {}};
      return {LpStatus::feasible, std::move(y)};
    }

    // Ratio test: the entering variable moves by t >= 0 from its bound.
    double t_best = upper[entering] - lower[entering];
    int leave_row = -1;  // -1 means bound flip
    for (int j = 0; j < r; ++j) {
      double coef = dir * tab[j][entering];
      int b = basis[j];
      double limit = inf;
      if (coef > kPivTol) {
        limit = (xval[b] - lower[b]) / coef;
      } else if (coef < -kPivTol && upper[b] < inf) {
        limit = (upper[b] - xval[b]) / (-coef);
      }
      if (limit < t_best - 1e-12 ||
          (limit < t_best + 1e-12 && leave_row >= 0 &&
           basis[j] < basis[leave_row])) {
        t_best = limit;
        leave_row = j;
      }
    }
    if (t_best == inf) return {LpStatus::stalled, {}};  // cannot happen
    t_best = std::max(t_best, 0.0);

    for (int j = 0; j < r; ++j) {
      xval[basis[j]] -= dir * tab[j][entering] * t_best;
    }
    xval[entering] =
        (at_upper[entering] ? upper[entering] : lower[entering]) + dir * t_best;

    if (leave_row < 0) {
      at_upper[entering] = !at_upper[entering];
      continue;
    }

    int leaving = basis[leave_row];
    double coef = dir * tab[leave_row][entering];
    at_upper[leaving] = coef < 0.0;  // hit its upper bound when increasing
    xval[leaving] = at_upper[leaving] ? upper[leaving] : lower[leaving];
    if (leaving >= p + r) upper[leaving] = 0.0;  // retire artificials

    double piv = tab[leave_row][entering];
    if (std::abs(piv) < kPivTol) return {LpStatus::stalled, {}};
    for (int c = 0; c < total; ++c) tab[leave_row][c] /= piv;
    for (int j = 0; j < r; ++j) {
      if (j == leave_row) continue;
      double f = tab[j][entering];
      if (f == 0.0) continue;
      for (int c = 0; c < total; ++c) tab[j][c] -= f * tab[leave_row][c];
    }
    basis[leave_row] = entering;
  }
  return {LpStatus::stalled, {}};
}

}  // namespace cutreg
