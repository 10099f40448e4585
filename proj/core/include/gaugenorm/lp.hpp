#pragma once

#include <cstddef>
#include <vector>

namespace gaugenorm {

// maximize c.x  subject to  A x <= b, x >= 0, with b >= 0 so that the origin
// is a feasible starting vertex.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> bounds;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-10;
  std::size_t max_pivots = 100000;
};

// Dense tableau primal simplex with Bland's rule. Throws NumericalError when
// the program is unbounded or the pivot budget runs out, DomainError when a
// bound is negative.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace gaugenorm
