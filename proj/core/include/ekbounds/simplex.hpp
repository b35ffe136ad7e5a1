#ifndef EKBOUNDS_SIMPLEX_HPP
#define EKBOUNDS_SIMPLEX_HPP

#include <vector>

// Dense tableau simplex for   max c.x  s.t.  A x <= b,  x >= 0,  b >= 0.
// Bland's smallest-index rule for both the entering and the leaving
// variable, which rules out cycling on the degenerate budget rows these
// problems always contain.  Problem sizes here are tiny (tens of variables),
// so reproducibility beats speed.

namespace ekbounds {

struct LpResult {
  enum class Status { Optimal, Unbounded, PivotLimit };
  Status status = Status::Optimal;
  double value = 0.0;
  std::vector<double> x;  // structural variables only
  int pivots = 0;
};

struct LpOptions {
  double tol = 1e-12;
  int max_pivots = 100000;
};

LpResult solve_lp_max(const std::vector<std::vector<double>>& rows,
                      const std::vector<double>& rhs,
                      const std::vector<double>& objective,
                      const LpOptions& options = {});

}  // namespace ekbounds

#endif  // EKBOUNDS_SIMPLEX_HPP
