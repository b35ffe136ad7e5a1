#include "ekbounds/simplex.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace ekbounds {

LpResult solve_lp_max(const std::vector<std::vector<double>>& rows,
                      const std::vector<double>& rhs,
                      const std::vector<double>& objective,
                      const LpOptions& options) {
  const std::size_t m = rows.size();
  const std::size_t n = objective.size();
  if (rhs.size() != m) throw std::invalid_argument("solve_lp_max: rhs size mismatch");
  for (const auto& row : rows)
    if (row.size() != n) throw std::invalid_argument("solve_lp_max: row size mismatch");
  for (double b : rhs)
    if (b < 0.0)
      throw std::invalid_argument("solve_lp_max: rhs must be nonnegative (slack basis start)");

  // Tableau: m constraint rows over [structural | slack | rhs], plus a
  // reduced-cost row.  Slack basis is feasible because b >= 0.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<double>> t(m, std::vector<double>(width, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i][j];
    t[i][n + i] = 1.0;
    t[i][width - 1] = rhs[i];
  }
  std::vector<double> cost(width, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LpResult result;
  while (true) {
    // entering: smallest index with positive reduced cost
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] > options.tol) {
        enter = j;
        break;
      }
    if (enter == width) break;  // optimal

    // leaving: min ratio, ties by smallest basis index
    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= options.tol) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (ratio < best_ratio - options.tol ||
          (ratio < best_ratio + options.tol && (leave == m || basis[i] < basis[leave]))) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave == m) {
      result.status = LpResult::Status::Unbounded;
      return result;
    }

    // pivot on (leave, enter)
    const double pivot = t[leave][enter];
    for (std::size_t j = 0; j < width; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    const double cfactor = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= cfactor * t[leave][j];
    basis[leave] = enter;

    if (++result.pivots > options.max_pivots) {
      result.status = LpResult::Status::PivotLimit;
      return result;
    }
  }

  result.x.assign(n, 0.0);
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      result.x[basis[i]] = t[i][width - 1];
      value += objective[basis[i]] * t[i][width - 1];
    }
  }
  result.value = value;
  result.status = LpResult::Status::Optimal;
  return result;
}

}  // namespace ekbounds
