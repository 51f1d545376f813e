#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "causalbound/distribution.hpp"
#include "causalbound/inequalities.hpp"

namespace causalbound {

/// Response value standing for the empty (no-click) outcome.
inline constexpr std::uint8_t kNoClick = 2;

/// One deterministic classical strategy: A's response to the instrument
/// setting and B's response to A's outcome, each in {0, 1, no-click}.
struct DeterministicStrategy {
  std::vector<std::uint8_t> fa;     // size m_settings
  std::array<std::uint8_t, 2> fb{}; // indexed by a

  bool fully_clicking() const;
  std::string describe() const; // e.g. "fa=[0,1] fb=[1,phi]"
  auto operator<=>(const DeterministicStrategy&) const = default;
};

/// All 3^m * 9 strategies, in lexicographic order on (fa, fb) with the
/// no-click value ordered last.
std::vector<DeterministicStrategy> enumerate_strategies(int m);

/// obs(a,b|x) = eta^2 [fa(x)=a][fb(a)=b], do(b|a) = eta [fb(a)=b].
/// Click mass per setting is eta^2 for fully clicking strategies and
/// drops to zero where a no-click response cuts in.
CausalDistribution strategy_to_distribution(const DeterministicStrategy& s, double eta);

/// Convex mixture of deterministic strategies.
struct StrategyMixture {
  std::vector<std::pair<DeterministicStrategy, double>> weights;

  /// Weighted average of the component tables at efficiency eta.
  CausalDistribution induced_distribution(double eta) const;
};

/// Uniform (flat Dirichlet) sample from the simplex over `strategies`.
StrategyMixture sample_mixture(const std::vector<DeterministicStrategy>& strategies,
                               std::mt19937_64& rng);

struct AuditReport {
  bool passed = true;
  double tol = 1e-9;
  double max_violation = 0.0;
  double argmax_eta = 0.0;
  DeterministicStrategy argmax_strategy; // lexicographically first attaining the max
  int argmax_mixture = -1;               // sample index when a mixture attains it
  std::size_t strategies_checked = 0;
  std::size_t mixtures_checked = 0;
  /// Min over sampled mixtures and settings of click mass / eta^2; 1 when
  /// every sampled mixture was fully clicking.
  double min_click_fraction = 1.0;
  std::string failure; // counterexample description when !passed
};

/// Sweeps every deterministic strategy (and `mixture_samples` seeded
/// random mixtures) over eta_grid and checks violation(spec) <= tol
/// throughout. The report carries the largest violation found and where.
AuditReport audit_bound(const InequalitySpec& spec, const std::vector<double>& eta_grid,
                        int mixture_samples, std::uint64_t seed,
                        double tol = kDefaultTol);

} // namespace causalbound
