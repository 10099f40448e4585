#include "gaugenorm/lp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gaugenorm/errors.hpp"

namespace gaugenorm {

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  const std::size_t nvars = lp.objective.size();
  const std::size_t m = lp.rows.size();
  if (lp.bounds.size() != m) throw DimensionError("LP: one bound per row required");
  for (const auto& row : lp.rows)
    if (row.size() != nvars) throw DimensionError("LP: row length differs from objective length");
  for (double b : lp.bounds)
    if (b < 0.0) throw DomainError("LP: bounds must be nonnegative");

  // Tableau columns: structural [0, nvars), slacks [nvars, nvars+m), rhs last.
  const std::size_t width = nvars + m + 1;
  std::vector<std::vector<double>> tab(m, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nvars; ++j) tab[i][j] = lp.rows[i][j];
    tab[i][nvars + i] = 1.0;
    tab[i][width - 1] = lp.bounds[i];
    basis[i] = nvars + i;
  }
  // Reduced costs for a maximization: entering candidates have cost > 0.
  std::vector<double> cost(width, 0.0);
  for (std::size_t j = 0; j < nvars; ++j) cost[j] = lp.objective[j];

  LpSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] > options.pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double a = tab[i][enter];
      if (a <= options.pivot_tol) continue;
      const double ratio = tab[i][width - 1] / a;
      if (ratio < best_ratio - 1e-14 ||
          (std::fabs(ratio - best_ratio) <= 1e-14 && leave < m && basis[i] < basis[leave])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave == m) throw NumericalError("LP is unbounded");
    if (++sol.pivots > options.max_pivots)
      throw NumericalError("LP pivot budget exhausted after " + std::to_string(options.max_pivots) + " pivots");

    const double piv = tab[leave][enter];
    for (double& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = tab[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[leave][j];
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }

  sol.x.assign(nvars, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < nvars) sol.x[basis[i]] = tab[i][width - 1];
  sol.value = 0.0;
  for (std::size_t j = 0; j < nvars; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace gaugenorm
