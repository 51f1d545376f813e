#include "causalbound/strategies.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "format.hpp"

namespace causalbound {

using detail::format;

bool DeterministicStrategy::fully_clicking() const {
  for (std::uint8_t v : fa) {
    if (v == kNoClick) return false;
    if (fb[v] == kNoClick) return false;
  }
  return true;
}

std::string DeterministicStrategy::describe() const {
  std::string s = "fa=[";
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (i) s += ',';
    s += fa[i] == kNoClick ? "phi" : std::string(1, char('0' + fa[i]));
  }
  s += "] fb=[";
  for (int a = 0; a < 2; ++a) {
    if (a) s += ',';
    s += fb[a] == kNoClick ? "phi" : std::string(1, char('0' + fb[a]));
  }
  s += ']';
  return s;
}

std::vector<DeterministicStrategy> enumerate_strategies(int m) {
  if (m < 2) throw std::invalid_argument("enumerate_strategies requires m >= 2");
  std::size_t count = 9;
  for (int i = 0; i < m; ++i) count *= 3;
  std::vector<DeterministicStrategy> out;
  out.reserve(count);

  DeterministicStrategy s;
  s.fa.assign(m, 0);
  // Odometer over (fa(0), ..., fa(m-1), fb(0), fb(1)) base 3, leftmost digit
  // most significant, so the output order is lexicographic.
  while (true) {
    out.push_back(s);
    int pos = m + 1;
    for (; pos >= 0; --pos) {
      std::uint8_t& digit = pos < m ? s.fa[pos] : s.fb[pos - m];
      if (digit < kNoClick) {
        ++digit;
        break;
      }
      digit = 0;
    }
    if (pos < 0) break;
  }
  return out;
}

CausalDistribution strategy_to_distribution(const DeterministicStrategy& s, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::invalid_argument("eta outside [0,1]");
  const int m = static_cast<int>(s.fa.size());
  CausalDistribution dist = CausalDistribution::zeros(m);
  const double eta2 = eta * eta;
  for (int x = 0; x < m; ++x) {
    const std::uint8_t a = s.fa[x];
    if (a == kNoClick) continue;
    const std::uint8_t b = s.fb[a];
    if (b == kNoClick) continue;
    dist.at(a, b, x) = eta2;
  }
  for (int a = 0; a < 2; ++a) {
    if (s.fb[a] == kNoClick) continue;
    dist.do_at(s.fb[a], a) = eta;
  }
  dist.eta = eta;
  return dist;
}

CausalDistribution StrategyMixture::induced_distribution(double eta) const {
  if (weights.empty()) throw std::invalid_argument("empty mixture");
  const int m = static_cast<int>(weights.front().first.fa.size());
  CausalDistribution mix = CausalDistribution::zeros(m);
  for (const auto& [strategy, w] : weights) {
    const CausalDistribution d = strategy_to_distribution(strategy, eta);
    for (std::size_t i = 0; i < mix.obs.size(); ++i) mix.obs[i] += w * d.obs[i];
    for (std::size_t i = 0; i < 4; ++i) mix.do_table[i] += w * d.do_table[i];
  }
  mix.eta = eta;
  return mix;
}

StrategyMixture sample_mixture(const std::vector<DeterministicStrategy>& strategies,
                               std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  StrategyMixture mix;
  mix.weights.reserve(strategies.size());
  double total = 0.0;
  for (const auto& s : strategies) {
    const double w = exp1(rng);
    mix.weights.emplace_back(s, w);
    total += w;
  }
  for (auto& [s, w] : mix.weights) w /= total;
  return mix;
}

AuditReport audit_bound(const InequalitySpec& spec, const std::vector<double>& eta_grid,
                        int mixture_samples, std::uint64_t seed, double tol) {
  if (mixture_samples < 0) throw std::invalid_argument("mixture_samples must be >= 0");
  for (double eta : eta_grid)
    if (!(eta >= 0.0 && eta <= 1.0))
      throw std::invalid_argument("eta grid entries must lie in [0,1]");

  const int m = spec.id == Inequality::Im22 ? spec.m_settings : 2;
  const std::vector<DeterministicStrategy> strategies = enumerate_strategies(m);

  AuditReport report;
  report.tol = tol;
  report.max_violation = -std::numeric_limits<double>::infinity();

  auto record = [&](double v, double eta, const DeterministicStrategy* s, int mixture) {
    if (v <= report.max_violation) return;
    report.max_violation = v;
    report.argmax_eta = eta;
    report.argmax_mixture = mixture;
    if (s) report.argmax_strategy = *s;
  };

  // Deterministic sweep. Tables at eta follow from the eta=1 indicator
  // tables by scaling obs with eta^2 and the do rows with eta.
  for (const auto& s : strategies) {
    const CausalDistribution base = strategy_to_distribution(s, 1.0);
    for (double eta : eta_grid) {
      CausalDistribution scaled = base;
      const double eta2 = eta * eta;
      for (double& v : scaled.obs) v *= eta2;
      for (double& v : scaled.do_table) v *= eta;
      scaled.eta = eta;
      record(violation(scaled, spec, eta), eta, &s, -1);
    }
    ++report.strategies_checked;
  }

  std::mt19937_64 rng(seed);
  for (int i = 0; i < mixture_samples; ++i) {
    const StrategyMixture mix = sample_mixture(strategies, rng);
    const CausalDistribution base = mix.induced_distribution(1.0);
    for (int x = 0; x < m; ++x)
      report.min_click_fraction = std::min(report.min_click_fraction, base.click_mass(x));
    for (double eta : eta_grid) {
      CausalDistribution scaled = base;
      const double eta2 = eta * eta;
      for (double& v : scaled.obs) v *= eta2;
      for (double& v : scaled.do_table) v *= eta;
      scaled.eta = eta;
      record(violation(scaled, spec, eta), eta, nullptr, i);
    }
    ++report.mixtures_checked;
  }

  if (report.max_violation > tol) {
    report.passed = false;
    if (report.argmax_mixture >= 0)
      report.failure = format("mixture sample %d violates %s by %g at eta=%g",
                              report.argmax_mixture,
                              std::string(to_string(spec.id)).c_str(),
                              report.max_violation, report.argmax_eta);
    else
      report.failure = format("strategy %s violates %s by %g at eta=%g",
                              report.argmax_strategy.describe().c_str(),
                              std::string(to_string(spec.id)).c_str(),
                              report.max_violation, report.argmax_eta);
  }
  return report;
}

} // namespace causalbound
