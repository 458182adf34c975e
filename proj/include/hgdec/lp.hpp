#pragma once

#include <vector>

namespace hgdec {

struct LpRow {
  std::vector<double> coeffs;
  char sense;  // '>', '<', '='
  double rhs;
};

// min c.x  s.t. rows, 0 <= x <= upper (negative upper bound = unbounded).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> upper;
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  double value = 0;
  std::vector<double> x;
};

// Dense two-phase primal simplex with Bland's rule; exact enough for the
// small covering programs this library builds (feasibility/optimality
// tolerance 1e-9 internal).
LpSolution lp_solve(const LinearProgram& lp);

}  // namespace hgdec
