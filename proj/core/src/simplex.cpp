#include "causalbound/simplex.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace causalbound {

namespace {

constexpr double kEps = 1e-9;
constexpr double kFeasTol = 1e-7;

struct Tableau {
  // rows[i] has `cols` coefficients followed by the rhs.
  std::vector<std::vector<double>> rows;
  std::vector<double> obj; // reduced-cost row, same layout
  std::vector<int> basis;  // basic column per row
  int cols = 0;

  double rhs(int i) const { return rows[i][cols]; }

  void pivot(int row, int col) {
    const double p = rows[row][col];
    for (double& v : rows[row]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const double f = rows[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) rows[i][j] -= f * rows[row][j];
    }
    const double f = obj[col];
    if (f != 0.0)
      for (int j = 0; j <= cols; ++j) obj[j] -= f * rows[row][j];
    basis[row] = col;
  }

  /// Minimizes the current objective row. Bland's rule: entering column is
  /// the smallest index with negative reduced cost; ratio ties break to the
  /// smallest basic column. `allowed` bounds the usable columns.
  bool iterate(int allowed) {
    long iterations = 0;
    const long cap = 1000L * (static_cast<long>(rows.size()) + cols + 10);
    while (true) {
      if (++iterations > cap)
        throw std::runtime_error("simplex iteration cap hit, numerically stuck pivot");
      int enter = -1;
      for (int j = 0; j < allowed; ++j)
        if (obj[j] < -kEps) {
          enter = j;
          break;
        }
      if (enter < 0) return true; // optimal
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const double a = rows[i][enter];
        if (a <= kEps) continue;
        const double ratio = rhs(static_cast<int>(i)) / a;
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps &&
             (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = static_cast<int>(i);
        }
      }
      if (leave < 0) return false; // unbounded
      pivot(leave, enter);
    }
  }
};

} // namespace

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

void LinearProgram::add_eq(std::vector<double> row, double rhs) {
  if (static_cast<int>(row.size()) != num_vars)
    throw std::invalid_argument("equality row size mismatch");
  eq.push_back(std::move(row));
  eq_rhs.push_back(rhs);
}

void LinearProgram::add_ub(std::vector<double> row, double rhs) {
  if (static_cast<int>(row.size()) != num_vars)
    throw std::invalid_argument("inequality row size mismatch");
  ub.push_back(std::move(row));
  ub_rhs.push_back(rhs);
}

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (static_cast<int>(lp.objective.size()) != n)
    throw std::invalid_argument("objective size mismatch");
  std::vector<double> lb = lp.lower_bounds;
  if (lb.empty()) lb.assign(n, 0.0);
  if (static_cast<int>(lb.size()) != n)
    throw std::invalid_argument("lower_bounds size mismatch");

  const int m_eq = static_cast<int>(lp.eq.size());
  const int m_ub = static_cast<int>(lp.ub.size());
  const int m = m_eq + m_ub;
  const int structural = n + m_ub; // shifted vars + slacks
  const int total = structural + m; // + one artificial per row

  Tableau t;
  t.cols = total;
  t.rows.assign(m, std::vector<double>(total + 1, 0.0));
  t.basis.assign(m, -1);

  auto shift_rhs = [&](const std::vector<double>& row, double rhs) {
    double s = rhs;
    for (int j = 0; j < n; ++j) s -= row[j] * lb[j];
    return s;
  };

  for (int i = 0; i < m_eq; ++i) {
    for (int j = 0; j < n; ++j) t.rows[i][j] = lp.eq[i][j];
    t.rows[i][total] = shift_rhs(lp.eq[i], lp.eq_rhs[i]);
  }
  for (int k = 0; k < m_ub; ++k) {
    const int i = m_eq + k;
    for (int j = 0; j < n; ++j) t.rows[i][j] = lp.ub[k][j];
    t.rows[i][n + k] = 1.0;
    t.rows[i][total] = shift_rhs(lp.ub[k], lp.ub_rhs[k]);
  }
  for (int i = 0; i < m; ++i) {
    if (t.rows[i][total] < 0.0)
      for (double& v : t.rows[i]) v = -v;
    t.rows[i][structural + i] = 1.0;
    t.basis[i] = structural + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.obj.assign(total + 1, 0.0);
  for (int i = 0; i < m; ++i) t.obj[structural + i] = 1.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= total; ++j) t.obj[j] -= t.rows[i][j];
  if (!t.iterate(total))
    throw std::runtime_error("phase-1 objective unbounded (internal error)");
  if (-t.obj[total] > kFeasTol) return LpSolution{LpStatus::Infeasible, {}, 0.0};

  // Drive leftover artificials out of the basis; a row with no structural
  // pivot available is redundant and dropped.
  for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < structural) continue;
    int col = -1;
    for (int j = 0; j < structural; ++j)
      if (std::fabs(t.rows[i][j]) > kEps) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // Phase 2: minimize -objective over the structural columns only.
  t.obj.assign(total + 1, 0.0);
  for (int j = 0; j < n; ++j) t.obj[j] = -lp.objective[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double c = t.obj[t.basis[i]];
    if (c != 0.0)
      for (int j = 0; j <= total; ++j) t.obj[j] -= c * t.rows[i][j];
  }
  if (!t.iterate(structural)) return LpSolution{LpStatus::Unbounded, {}, 0.0};

  std::vector<double> x(lb);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) x[t.basis[i]] += t.rows[i][total];

  double obj = 0.0;
  for (int j = 0; j < n; ++j) obj += lp.objective[j] * x[j];
  return LpSolution{LpStatus::Optimal, std::move(x), obj};
}

std::string dump_tableau(const LinearProgram& lp) {
  std::ostringstream out;
  out << "# columns: ";
  for (int j = 0; j < lp.num_vars; ++j) out << "x" << j << " ";
  for (std::size_t k = 0; k < lp.ub.size(); ++k) out << "s" << k << " ";
  out << "| rhs\n";
  char buf[32];
  auto emit = [&](const std::vector<double>& row, double slack_col, int slack_idx,
                  double rhs, const char* kind) {
    out << kind << " ";
    for (double v : row) {
      std::snprintf(buf, sizeof(buf), "%.6g", v);
      out << buf << " ";
    }
    for (std::size_t k = 0; k < lp.ub.size(); ++k)
      out << (static_cast<int>(k) == slack_idx ? slack_col : 0.0) << " ";
    std::snprintf(buf, sizeof(buf), "%.6g", rhs);
    out << "| " << buf << "\n";
  };
  for (std::size_t i = 0; i < lp.eq.size(); ++i)
    emit(lp.eq[i], 0.0, -1, lp.eq_rhs[i], "=");
  for (std::size_t k = 0; k < lp.ub.size(); ++k)
    emit(lp.ub[k], 1.0, static_cast<int>(k), lp.ub_rhs[k], "<");
  out << "max ";
  for (double v : lp.objective) {
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    out << buf << " ";
  }
  out << "\n";
  return out.str();
}

} // namespace causalbound
