#pragma once

#include <string>
#include <vector>

namespace causalbound {

enum class LpStatus { Optimal, Infeasible, Unbounded };
std::string_view to_string(LpStatus status);

/// maximize objective . x
/// subject to  eq x = eq_rhs,  ub x <= ub_rhs,  x >= lower_bounds
/// (componentwise; an empty lower_bounds vector means all zeros).
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> eq;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> ub;
  std::vector<double> ub_rhs;
  std::vector<double> lower_bounds;

  void add_eq(std::vector<double> row, double rhs);
  void add_ub(std::vector<double> row, double rhs);
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

/// Dense two-phase primal simplex with Bland's anti-cycling rule.
/// Deterministic: identical inputs give identical vertices. Intended for
/// the small problems built here (up to a few hundred variables).
LpSolution solve_lp(const LinearProgram& lp);

/// Plain-text dump of the initial tableau for debugging. Column order:
/// x0..x{n-1} (shifted by the lower bounds), one slack per ub row, rhs.
std::string dump_tableau(const LinearProgram& lp);

} // namespace causalbound
