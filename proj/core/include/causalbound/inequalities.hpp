#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "causalbound/distribution.hpp"

namespace causalbound {

/// The causal bounds the library evaluates. Cace, I222 and Im22 are
/// classical bounds (obeyed by every classical correlation); Qace and
/// J222 are quantum bounds (obeyed by every quantum correlation).
enum class Inequality { Cace, I222, Im22, Qace, J222 };

struct InequalitySpec {
  Inequality id = Inequality::Cace;
  int m_settings = 2; // M >= 2 for Im22, exactly 2 for the others
};

/// Case-insensitive CLI identifiers: "cace", "i222", "im22", "qace", "j222".
std::optional<Inequality> inequality_from_string(std::string_view name);
std::string_view to_string(Inequality id);
bool is_classical_bound(Inequality id);

/// The square-root expression entering the quantum bounds, together with
/// the two signed sums s_a = sum_x (-1)^x [p(a,0|x) - p(a,1|x)] it is
/// built from.
struct XiValue {
  double xi = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
};

/// min over the sign s of sqrt((1 s s0)(1 s s1)); a branch with a negative
/// factor is excluded. Throws std::domain_error when both branches are.
double xi_from_sums(double s0, double s1);

/// 2 p(0,0|0) + p(1,1|0) + p(0,1|1) + p(1,1|1) - 2. Requires two settings.
double eval_cace_rhs(const CausalDistribution& dist);

/// 2 p(0,0|0) + p(1,1|0) + p(0,1|1) + p(1,1|1) - 1 - eta^2.
double eval_i222(const CausalDistribution& dist, double eta);

/// M/(M-1) p(0,0|0) + 1/(M-1) p(0,1|1) + 1/(M-1) sum_x p(1,1|x)
/// - 1 - eta^2/(M-1). Coincides with eval_i222 at M = 2.
double eval_im22(const CausalDistribution& dist, double eta);

XiValue eval_xi(const CausalDistribution& dist);

/// sum_x [p(0,0|x) + p(1,1|x)] - xi - 1.
double eval_qace_rhs(const CausalDistribution& dist);

/// [p(0,0|0) + p(1,1|0) - p(0,1|1) - p(1,0|1) - xi] / eta. Requires eta > 0.
double eval_j222(const CausalDistribution& dist, double eta);

/// Bound RHS minus ace(dist); positive means the bound is violated.
/// `dist` must be stated at efficiency eta; if its eta field differs a
/// consistency warning is printed to stderr and the explicit eta is used.
double violation(const CausalDistribution& dist, const InequalitySpec& spec,
                 double eta);

/// Closed form of max over a of [-a*xp - b*yp - |a + b|] with the
/// multiplier tied as b = (1+a)/(1+2a):
///   (xp - yp)/2 - min over signs of sqrt((1 +- xp)(1 +- yp)).
/// Valid for xp, yp in [-1, 1].
double envelope_max(double xp, double yp);

} // namespace causalbound
