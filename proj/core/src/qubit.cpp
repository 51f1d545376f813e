#include "causalbound/qubit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace causalbound {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

/// Outcome-0 effect at the given Bloch angle; outcome 1 is its complement.
Mat2 effect(double angle) {
  const double s = std::sin(angle), c = std::cos(angle);
  return Mat2{{0.5 * (1.0 + c), 0.0}, {0.5 * s, 0.0}, {0.5 * s, 0.0}, {0.5 * (1.0 - c), 0.0}};
}

Mat2 complement(const Mat2& m) {
  return Mat2{1.0 - m.m00, -m.m01, -m.m10, 1.0 - m.m11};
}

/// <psi| P (x) Q |psi> for |psi> = cos(alpha)|00> + sin(alpha)|11>.
double pair_expectation(double alpha, const Mat2& p, const Mat2& q) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double cross = (p.m01 * q.m01 + p.m10 * q.m10).real();
  return c * c * (p.m00 * q.m00).real() + c * s * cross + s * s * (p.m11 * q.m11).real();
}

/// <psi| 1 (x) Q |psi>.
double single_expectation(double alpha, const Mat2& q) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  return c * c * q.m00.real() + s * s * q.m11.real();
}

struct PatternSearchResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Coordinate pattern search (maximization) with shrinking step.
template <typename F>
PatternSearchResult pattern_search(F&& objective, std::vector<double> x,
                                   double step = 0.3, double shrink = 0.5,
                                   double min_step = 1e-6,
                                   std::size_t max_evals = 200000) {
  PatternSearchResult res;
  double best = objective(x);
  ++res.evaluations;
  while (step >= min_step && res.evaluations < max_evals) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double dir : {+1.0, -1.0}) {
        std::vector<double> trial = x;
        trial[i] += dir * step;
        const double v = objective(trial);
        ++res.evaluations;
        if (v > best) {
          best = v;
          x = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= shrink;
  }
  res.x = std::move(x);
  res.value = best;
  return res;
}

std::vector<double> pack(const QubitCorrelationParams& p) {
  std::vector<double> v;
  v.reserve(p.theta.size() + 3);
  v.push_back(p.alpha);
  v.insert(v.end(), p.theta.begin(), p.theta.end());
  v.push_back(p.phi[0]);
  v.push_back(p.phi[1]);
  return v;
}

QubitCorrelationParams unpack(const std::vector<double>& v, int m) {
  QubitCorrelationParams p;
  p.alpha = v[0];
  p.theta.assign(v.begin() + 1, v.begin() + 1 + m);
  p.phi = {v[m + 1], v[m + 2]};
  return p;
}

} // namespace

QubitCorrelationParams QubitCorrelationParams::normalized() const {
  QubitCorrelationParams p = *this;
  p.alpha = wrap_angle(p.alpha);
  for (double& t : p.theta) t = wrap_angle(t);
  for (double& f : p.phi) f = wrap_angle(f);
  return p;
}

MeasurementOperators build_measurements(const QubitCorrelationParams& params) {
  MeasurementOperators ops;
  ops.a_ops.reserve(params.theta.size());
  for (double t : params.theta) {
    const Mat2 m0 = effect(t);
    ops.a_ops.push_back({m0, complement(m0)});
  }
  for (int setting = 0; setting < 2; ++setting) {
    const Mat2 n0 = effect(params.phi[setting]);
    ops.b_ops[setting] = {n0, complement(n0)};
  }
  return ops;
}

CausalDistribution correlation_from_params(const QubitCorrelationParams& params) {
  const int m = static_cast<int>(params.theta.size());
  if (m < 2) throw std::invalid_argument("need at least two measurement settings");
  const MeasurementOperators ops = build_measurements(params);
  CausalDistribution dist = CausalDistribution::zeros(m);
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        dist.at(a, b, x) =
            pair_expectation(params.alpha, ops.a_ops[x][a], ops.b_ops[a][b]);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      dist.do_at(b, a) = single_expectation(params.alpha, ops.b_ops[a][b]);
  dist.eta = 1.0;
  return dist;
}

BellDistribution bell_from_params(const QubitCorrelationParams& params) {
  const int m = static_cast<int>(params.theta.size());
  if (m < 2) throw std::invalid_argument("need at least two measurement settings");
  const MeasurementOperators ops = build_measurements(params);
  BellDistribution bell = BellDistribution::zeros(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          bell.at(a, b, x, y) =
              pair_expectation(params.alpha, ops.a_ops[x][a], ops.b_ops[y][b]);
  return bell;
}

QubitCorrelationParams reference_optimum_params() {
  QubitCorrelationParams p;
  p.alpha = 0.7165;
  p.theta = {0.2447, -kPi / 2.0};
  p.phi = {0.6750, -0.6750};
  return p;
}

const QubitCorrelationParams& refined_optimum_params() {
  static const QubitCorrelationParams refined = [] {
    const InequalitySpec spec{Inequality::Cace, 2};
    auto objective = [&](const std::vector<double>& v) {
      const CausalDistribution d = correlation_from_params(unpack(v, 2));
      return violation(d, spec, 1.0);
    };
    const auto res = pattern_search(objective, pack(reference_optimum_params()), 0.05,
                                    0.5, 1e-9);
    return unpack(res.x, 2).normalized();
  }();
  return refined;
}

CausalDistribution tight_quantum_distribution() {
  CausalDistribution dist = CausalDistribution::zeros(2);
  const double r = std::sqrt(2.0) - 1.0;
  dist.at(0, 0, 0) = r;
  dist.at(0, 1, 0) = 0.5 - r;
  dist.at(1, 1, 0) = 0.5;
  dist.at(0, 1, 1) = 0.5;
  dist.at(1, 1, 1) = 0.5;
  dist.do_table = {0.5, 0.5, 0.5, 0.5};
  dist.eta = 1.0;
  return dist;
}

OptimizeResult optimize_violation(const InequalitySpec& spec, double eta, int restarts,
                                  std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must be in (0,1]");
  const int m = spec.id == Inequality::Im22 ? spec.m_settings : 2;

  auto objective = [&](const std::vector<double>& v) {
    CausalDistribution d = correlation_from_params(unpack(v, m));
    if (eta < 1.0) d = apply_efficiency(d, DetectionEfficiency(eta));
    return violation(d, spec, eta);
  };

  OptimizeResult best;
  best.violation = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start;
    if (r == 0 && m == 2) {
      start = pack(reference_optimum_params());
    } else {
      // Per-restart sub-seed, independent of evaluation order.
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(r) + 1)));
      std::uniform_real_distribution<double> angle(-kPi, kPi);
      start.resize(m + 3);
      for (double& v : start) v = angle(rng);
    }
    const auto res = pattern_search(objective, std::move(start));
    best.evaluations += res.evaluations;
    if (res.value > best.violation) {
      best.violation = res.value;
      best.params = unpack(res.x, m).normalized();
    }
  }
  return best;
}

} // namespace causalbound
