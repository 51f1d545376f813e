#include "causalbound/inequalities.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "format.hpp"

namespace causalbound {

using detail::format;

namespace {

void require_two_settings(const CausalDistribution& dist, const char* what) {
  if (dist.m_settings != 2)
    throw std::invalid_argument(
        format("%s requires exactly 2 settings, got %d", what, dist.m_settings));
}

} // namespace

std::optional<Inequality> inequality_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "cace") return Inequality::Cace;
  if (lower == "i222") return Inequality::I222;
  if (lower == "im22") return Inequality::Im22;
  if (lower == "qace") return Inequality::Qace;
  if (lower == "j222") return Inequality::J222;
  return std::nullopt;
}

std::string_view to_string(Inequality id) {
  switch (id) {
    case Inequality::Cace: return "cace";
    case Inequality::I222: return "i222";
    case Inequality::Im22: return "im22";
    case Inequality::Qace: return "qace";
    case Inequality::J222: return "j222";
  }
  return "?";
}

bool is_classical_bound(Inequality id) {
  return id == Inequality::Cace || id == Inequality::I222 || id == Inequality::Im22;
}

double xi_from_sums(double s0, double s1) {
  double best = std::numeric_limits<double>::infinity();
  for (double sign : {+1.0, -1.0}) {
    double f0 = 1.0 + sign * s0;
    double f1 = 1.0 + sign * s1;
    // Tiny negative factors are rounding noise, not an excluded branch.
    if (f0 < 0.0 && f0 > -1e-12) f0 = 0.0;
    if (f1 < 0.0 && f1 > -1e-12) f1 = 0.0;
    if (f0 < 0.0 || f1 < 0.0) continue;
    best = std::min(best, std::sqrt(f0 * f1));
  }
  if (!std::isfinite(best))
    throw std::domain_error(format(
        "xi undefined: both sign branches have a negative factor (s0=%g, s1=%g)", s0, s1));
  return best;
}

double eval_cace_rhs(const CausalDistribution& dist) {
  require_two_settings(dist, "cace");
  return 2.0 * dist.p(0, 0, 0) + dist.p(1, 1, 0) + dist.p(0, 1, 1) + dist.p(1, 1, 1) - 2.0;
}

double eval_i222(const CausalDistribution& dist, double eta) {
  require_two_settings(dist, "i222");
  return 2.0 * dist.p(0, 0, 0) + dist.p(1, 1, 0) + dist.p(0, 1, 1) + dist.p(1, 1, 1) -
         1.0 - eta * eta;
}

double eval_im22(const CausalDistribution& dist, double eta) {
  const int m = dist.m_settings;
  if (m < 2) throw std::invalid_argument("im22 requires at least 2 settings");
  const double inv = 1.0 / (m - 1);
  double diag = 0.0;
  for (int x = 0; x < m; ++x) diag += dist.p(1, 1, x);
  return m * inv * dist.p(0, 0, 0) + inv * dist.p(0, 1, 1) + inv * diag - 1.0 -
         eta * eta * inv;
}

XiValue eval_xi(const CausalDistribution& dist) {
  require_two_settings(dist, "xi");
  XiValue v;
  v.s0 = (dist.p(0, 0, 0) - dist.p(0, 1, 0)) - (dist.p(0, 0, 1) - dist.p(0, 1, 1));
  v.s1 = (dist.p(1, 0, 0) - dist.p(1, 1, 0)) - (dist.p(1, 0, 1) - dist.p(1, 1, 1));
  v.xi = xi_from_sums(v.s0, v.s1);
  return v;
}

double eval_qace_rhs(const CausalDistribution& dist) {
  require_two_settings(dist, "qace");
  const double xi = eval_xi(dist).xi;
  return dist.p(0, 0, 0) + dist.p(1, 1, 0) + dist.p(0, 0, 1) + dist.p(1, 1, 1) - xi - 1.0;
}

double eval_j222(const CausalDistribution& dist, double eta) {
  require_two_settings(dist, "j222");
  if (eta <= 0.0) throw std::invalid_argument("j222 requires eta > 0");
  const double xi = eval_xi(dist).xi;
  return (dist.p(0, 0, 0) + dist.p(1, 1, 0) - dist.p(0, 1, 1) - dist.p(1, 0, 1) - xi) / eta;
}

double violation(const CausalDistribution& dist, const InequalitySpec& spec,
                 double eta) {
  if (std::fabs(dist.eta - eta) > kDefaultTol)
    std::cerr << "warning: distribution stated at eta=" << dist.eta
              << " evaluated against eta=" << eta << "\n";
  if (spec.id == Inequality::Im22) {
    if (spec.m_settings != dist.m_settings)
      throw std::invalid_argument(format("im22 spec has M=%d but the table has M=%d",
                                         spec.m_settings, dist.m_settings));
  } else if (spec.m_settings != 2) {
    throw std::invalid_argument(format("%s requires M=2 in the spec",
                                       std::string(to_string(spec.id)).c_str()));
  }
  double rhs = 0.0;
  switch (spec.id) {
    case Inequality::Cace: rhs = eval_cace_rhs(dist); break;
    case Inequality::I222: rhs = eval_i222(dist, eta); break;
    case Inequality::Im22: rhs = eval_im22(dist, eta); break;
    case Inequality::Qace: rhs = eval_qace_rhs(dist); break;
    case Inequality::J222: rhs = eval_j222(dist, eta); break;
  }
  return rhs - ace(dist);
}

double envelope_max(double xp, double yp) {
  return 0.5 * (xp - yp) - xi_from_sums(xp, yp);
}

} // namespace causalbound
