#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "causalbound/qubit.hpp"
#include "test_support.hpp"

using namespace causalbound;

namespace {

constexpr double kPi = std::numbers::pi;

double min_eigenvalue(const Mat2& m) {
  const double tr = (m.m00 + m.m11).real();
  const double det = (m.m00 * m.m11 - m.m01 * m.m10).real();
  const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
  return 0.5 * tr - disc;
}

QubitCorrelationParams random_params(std::mt19937_64& rng, int m = 2) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  QubitCorrelationParams p;
  p.alpha = angle(rng);
  p.theta.resize(m);
  for (double& t : p.theta) t = angle(rng);
  p.phi = {angle(rng), angle(rng)};
  return p;
}

} // namespace

TEST_CASE("measurement effects at the pinned angles") {
  QubitCorrelationParams p;
  p.theta = {0.0, kPi / 2.0};
  p.phi = {0.0, 0.0};
  const MeasurementOperators ops = build_measurements(p);

  CHECK(ops.a_ops[0][0].m00.real() == doctest::Approx(1.0));
  CHECK(ops.a_ops[0][0].m11.real() == doctest::Approx(0.0));
  CHECK(ops.a_ops[0][0].m01.real() == doctest::Approx(0.0));

  CHECK(ops.a_ops[1][0].m00.real() == doctest::Approx(0.5));
  CHECK(ops.a_ops[1][0].m01.real() == doctest::Approx(0.5));
  CHECK(ops.a_ops[1][0].m10.real() == doctest::Approx(0.5));
}

TEST_CASE("measurement pairs are complete rank-1 projectors") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const QubitCorrelationParams p = random_params(rng);
    const MeasurementOperators ops = build_measurements(p);
    auto check_pair = [](const std::array<Mat2, 2>& pair) {
      CHECK(std::fabs((pair[0].m00 + pair[1].m00).real() - 1.0) <= 1e-12);
      CHECK(std::fabs((pair[0].m11 + pair[1].m11).real() - 1.0) <= 1e-12);
      CHECK(std::abs(pair[0].m01 + pair[1].m01) <= 1e-12);
      for (const Mat2& effect : pair) {
        CHECK(min_eigenvalue(effect) >= -1e-12);
        // Rank-1 projector: eigenvalues {0, 1}.
        const double det = (effect.m00 * effect.m11 - effect.m01 * effect.m10).real();
        CHECK(std::fabs(det) <= 1e-12);
        CHECK(std::fabs((effect.m00 + effect.m11).real() - 1.0) <= 1e-12);
      }
    };
    for (const auto& pair : ops.a_ops) check_pair(pair);
    for (const auto& pair : ops.b_ops) check_pair(pair);
  }
}

TEST_CASE("product state measured in its own basis is deterministic") {
  QubitCorrelationParams p;
  p.alpha = 0.0;
  p.theta = {0.0, 0.0};
  p.phi = {0.0, 0.0};
  const CausalDistribution d = correlation_from_params(p);
  for (int x = 0; x < 2; ++x) CHECK(d.p(0, 0, x) == doctest::Approx(1.0));
  CHECK(ace(d) == doctest::Approx(0.0));
}

TEST_CASE("correlation tables are normalized for random angles") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const CausalDistribution d = correlation_from_params(random_params(rng));
    for (int x = 0; x < 2; ++x) {
      CHECK(std::fabs(d.click_mass(x) - 1.0) <= 1e-12);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          CHECK(d.p(a, b, x) >= -1e-12);
          CHECK(d.p(a, b, x) <= 1.0 + 1e-12);
        }
    }
    for (int a = 0; a < 2; ++a)
      CHECK(std::fabs(d.p_do(0, a) + d.p_do(1, a) - 1.0) <= 1e-12);
  }
}

TEST_CASE("bipartite completion is nonsignaling and reproduces the do table") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const QubitCorrelationParams p = random_params(rng);
    const CausalDistribution d = correlation_from_params(p);
    const BellDistribution bell = bell_from_params(p);
    CHECK(is_nonsignaling(bell, 1e-12));
    const auto do_table = do_from_bell(bell, 1e-12);
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(do_table[i] - d.do_table[i]) <= 1e-12);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int x = 0; x < 2; ++x)
          CHECK(bell.p(a, b, x, a) == doctest::Approx(d.p(a, b, x)).epsilon(1e-12));
  }
}

TEST_CASE("reflecting every angle leaves the table invariant") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const QubitCorrelationParams p = random_params(rng);
    QubitCorrelationParams mirrored = p;
    for (double& t : mirrored.theta) t = -t;
    for (double& f : mirrored.phi) f = -f;
    const CausalDistribution a = correlation_from_params(p);
    const CausalDistribution b = correlation_from_params(mirrored);
    for (std::size_t i = 0; i < a.obs.size(); ++i)
      CHECK(std::fabs(a.obs[i] - b.obs[i]) <= 1e-12);
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(a.do_table[i] - b.do_table[i]) <= 1e-12);
  }
}

TEST_CASE("angle normalization wraps into (-pi, pi]") {
  QubitCorrelationParams p;
  p.alpha = 3.0 * kPi;
  p.theta = {-3.0 * kPi, kPi};
  p.phi = {2.0 * kPi, -kPi};
  const QubitCorrelationParams n = p.normalized();
  CHECK(n.alpha == doctest::Approx(kPi));
  CHECK(n.theta[0] == doctest::Approx(kPi));
  CHECK(n.theta[1] == doctest::Approx(kPi));
  CHECK(n.phi[0] == doctest::Approx(0.0));
  CHECK(n.phi[1] == doctest::Approx(kPi));
}

TEST_CASE("reference angles reproduce the catalogued optimum") {
  const CausalDistribution d = correlation_from_params(reference_optimum_params());
  CHECK(std::fabs(violation(d, {Inequality::Cace, 2}, 1.0) - 0.1716) < 5e-4);
  CHECK(ace(d) <= 1e-9);

  const CausalDistribution refined = correlation_from_params(refined_optimum_params());
  CHECK(violation(refined, {Inequality::Cace, 2}, 1.0) ==
        doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-7));
}

TEST_CASE("tight quantum table sits on the quantum bound") {
  const CausalDistribution d = tight_quantum_distribution();
  for (int x = 0; x < 2; ++x) CHECK(std::fabs(d.click_mass(x) - 1.0) <= 1e-12);
  CHECK(std::fabs(eval_qace_rhs(d)) <= 1e-12);
  CHECK(eval_xi(d).xi == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  CHECK(ace(d) == 0.0);
}

TEST_CASE("optimizer recovers the classical-bound optimum") {
  const OptimizeResult cace = optimize_violation({Inequality::Cace, 2}, 1.0, 4, 1);
  CHECK(cace.violation >= 0.1715);
  CHECK(cace.violation <= 3.0 - 2.0 * std::sqrt(2.0) + 1e-6);

  const OptimizeResult i222 = optimize_violation({Inequality::I222, 2}, 1.0, 4, 1);
  CHECK(i222.violation >= 0.1715);
  CHECK(i222.violation <= 3.0 - 2.0 * std::sqrt(2.0) + 1e-6);
}

TEST_CASE("optimizer cannot beat the quantum bound from inside the family") {
  const OptimizeResult qace = optimize_violation({Inequality::Qace, 2}, 1.0, 6, 1);
  CHECK(qace.violation <= 1e-6);
}

TEST_CASE("optimizer handles the multi-setting bound inside the nonsignaling cap") {
  // Quantum tables are nonsignaling, so the LP maximum 1/(2M-2) caps them.
  const OptimizeResult im22 = optimize_violation({Inequality::Im22, 3}, 1.0, 3, 2);
  CHECK(im22.params.theta.size() == 3);
  CHECK(im22.violation <= 0.25 + 1e-9);
}

TEST_CASE("optimizer is deterministic given the seed") {
  const OptimizeResult a = optimize_violation({Inequality::Cace, 2}, 0.97, 3, 5);
  const OptimizeResult b = optimize_violation({Inequality::Cace, 2}, 0.97, 3, 5);
  CHECK(a.violation == b.violation);
  CHECK(a.params.alpha == b.params.alpha);
}
