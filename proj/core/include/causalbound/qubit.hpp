#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "causalbound/distribution.hpp"
#include "causalbound/inequalities.hpp"

namespace causalbound {

struct Mat2 {
  std::complex<double> m00, m01, m10, m11;
};

/// State and measurement angles (radians) of the real two-qubit family
/// cos(alpha)|00> + sin(alpha)|11>, with projective measurements in the
/// X-Z plane: outcome-0 effect (1 + sin(angle) sx + cos(angle) sz) / 2.
struct QubitCorrelationParams {
  double alpha = 0.0;
  std::vector<double> theta;   // A's angle per setting x
  std::array<double, 2> phi{}; // B's angle per setting

  /// Angles wrapped to (-pi, pi].
  QubitCorrelationParams normalized() const;
};

struct MeasurementOperators {
  std::vector<std::array<Mat2, 2>> a_ops;   // [x][outcome]
  std::array<std::array<Mat2, 2>, 2> b_ops; // [setting][outcome]
};

/// Effects per setting; each pair sums to the identity and is PSD by
/// construction (rank-1 projectors).
MeasurementOperators build_measurements(const QubitCorrelationParams& params);

/// obs(a,b|x) = <psi| M^x_a (x) N^a_b |psi>, do(b|a) = <psi| 1 (x) N^a_b |psi>,
/// stated at eta = 1.
CausalDistribution correlation_from_params(const QubitCorrelationParams& params);

/// Full bipartite table <psi| M^x_a (x) N^y_b |psi>, which decouples B's
/// setting from A's outcome. Its y = a diagonal reproduces
/// correlation_from_params and it is nonsignaling by construction.
BellDistribution bell_from_params(const QubitCorrelationParams& params);

/// The catalogued two-setting optimum of the classical-bound violation
/// (alpha = 0.7165, theta = {0.2447, -pi/2}, phi = {0.6750, -0.6750}).
QubitCorrelationParams reference_optimum_params();

/// reference_optimum_params polished by a deterministic local pattern
/// search on the cace violation at eta = 1. Memoized.
const QubitCorrelationParams& refined_optimum_params();

/// The two-setting table saturating the quantum bound:
/// p(0,0|0) = sqrt(2)-1, p(0,0|1) = 0, p(1,0|x) = 0, p(1,1|x) = 1/2,
/// p(0,1|x) = 1/2 - p(0,0|x); do-table uniform so that ace = 0.
CausalDistribution tight_quantum_distribution();

struct OptimizeResult {
  QubitCorrelationParams params;
  double violation = 0.0;
  std::size_t evaluations = 0;
};

/// Multi-start pattern search over the angle family: maximizes
/// violation(apply_efficiency(correlation_from_params(p), eta), spec, eta).
/// Restart 0 starts from reference_optimum_params when the spec has two
/// settings; the rest start from seeded random angles. Deterministic
/// given seed.
OptimizeResult optimize_violation(const InequalitySpec& spec, double eta,
                                  int restarts, std::uint64_t seed);

} // namespace causalbound
