#include "causalbound/nonsignaling.hpp"

#include <stdexcept>

#include "format.hpp"

namespace causalbound {

using detail::format;

BellDistribution canonical_ns(int m) {
  BellDistribution bell = BellDistribution::zeros(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a) {
        const int b = (x == 1 && y == 0) ? 1 - a : a;
        bell.at(a, b, x, y) = 0.5;
      }
  return bell;
}

LinearProgram build_ns_lp(const InequalitySpec& spec, double eta) {
  if (!is_classical_bound(spec.id))
    throw std::invalid_argument(
        "ns_max_violation handles the classical bounds only (cace, i222, im22)");
  const int m = spec.id == Inequality::Im22 ? spec.m_settings : 2;
  if (m < 2) throw std::invalid_argument("im22 requires M >= 2");
  if (spec.id != Inequality::Im22 && spec.m_settings != 2)
    throw std::invalid_argument("cace/i222 require M = 2");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must be in (0,1]");

  const int nvars = 8 * m + 1; // table entries + violation variable t
  const int t_col = 8 * m;
  auto idx = [m](int a, int b, int x, int y) { return ((a * 2 + b) * m + x) * 2 + y; };

  LinearProgram lp;
  lp.num_vars = nvars;
  lp.objective.assign(nvars, 0.0);
  lp.objective[t_col] = 1.0;
  lp.lower_bounds.assign(nvars, 0.0);
  lp.lower_bounds[t_col] = -8.0; // violations stay far above this

  // Normalization per (x,y).
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < 2; ++y) {
      std::vector<double> row(nvars, 0.0);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) row[idx(a, b, x, y)] = 1.0;
      lp.add_eq(std::move(row), 1.0);
    }
  // B's marginal independent of x.
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b)
      for (int x = 1; x < m; ++x) {
        std::vector<double> row(nvars, 0.0);
        for (int a = 0; a < 2; ++a) {
          row[idx(a, b, x, y)] += 1.0;
          row[idx(a, b, 0, y)] -= 1.0;
        }
        lp.add_eq(std::move(row), 0.0);
      }
  // A's marginal independent of y.
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < 2; ++a) {
      std::vector<double> row(nvars, 0.0);
      for (int b = 0; b < 2; ++b) {
        row[idx(a, b, x, 0)] += 1.0;
        row[idx(a, b, x, 1)] -= 1.0;
      }
      lp.add_eq(std::move(row), 0.0);
    }

  // Bound coefficients on the causal diagonal p(a,b|x) = p(a,b|x,a),
  // pre-scaled by eta^2; the eta-independent constant goes to the rhs.
  const double eta2 = eta * eta;
  std::vector<double> rhs_coeff(nvars, 0.0);
  double rhs_const = 0.0;
  switch (spec.id) {
    case Inequality::Cace:
      rhs_coeff[idx(0, 0, 0, 0)] += 2.0 * eta2;
      rhs_coeff[idx(1, 1, 0, 1)] += eta2;
      rhs_coeff[idx(0, 1, 1, 0)] += eta2;
      rhs_coeff[idx(1, 1, 1, 1)] += eta2;
      rhs_const = -2.0;
      break;
    case Inequality::I222:
      rhs_coeff[idx(0, 0, 0, 0)] += 2.0 * eta2;
      rhs_coeff[idx(1, 1, 0, 1)] += eta2;
      rhs_coeff[idx(0, 1, 1, 0)] += eta2;
      rhs_coeff[idx(1, 1, 1, 1)] += eta2;
      rhs_const = -1.0 - eta2;
      break;
    case Inequality::Im22: {
      const double inv = 1.0 / (m - 1);
      rhs_coeff[idx(0, 0, 0, 0)] += m * inv * eta2;
      rhs_coeff[idx(0, 1, 1, 0)] += inv * eta2;
      for (int x = 0; x < m; ++x) rhs_coeff[idx(1, 1, x, 1)] += inv * eta2;
      rhs_const = -1.0 - eta2 * inv;
      break;
    }
    default:
      break;
  }

  // t <= rhs(p) - eta [do(b|a) - do(b|a')], linearized over all eight
  // (b,a,a') combinations. do(b|a) = sum_a' p(a',b|0,a).
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap) {
        std::vector<double> row(nvars, 0.0);
        row[t_col] = 1.0;
        for (int j = 0; j < 8 * m; ++j) row[j] -= rhs_coeff[j];
        for (int as = 0; as < 2; ++as) {
          row[idx(as, b, 0, a)] += eta;
          row[idx(as, b, 0, ap)] -= eta;
        }
        lp.add_ub(std::move(row), rhs_const);
      }
  return lp;
}

NsMaxResult ns_max_violation(const InequalitySpec& spec, double eta) {
  const LinearProgram lp = build_ns_lp(spec, eta);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::runtime_error(format("nonsignaling LP came back %s",
                                    std::string(to_string(sol.status)).c_str()));
  const int m = spec.id == Inequality::Im22 ? spec.m_settings : 2;
  NsMaxResult result;
  result.argmax = BellDistribution::zeros(m);
  for (int j = 0; j < 8 * m; ++j) result.argmax.table[j] = sol.x[j];
  result.violation = sol.x[8 * m];
  return result;
}

} // namespace causalbound
