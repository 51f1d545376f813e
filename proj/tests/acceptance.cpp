// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each, nonzero exit when anything fails. Every tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "causalbound/inequalities.hpp"
#include "causalbound/io.hpp"
#include "causalbound/nonsignaling.hpp"
#include "causalbound/qubit.hpp"
#include "causalbound/strategies.hpp"
#include "causalbound/thresholds.hpp"
#include "test_support.hpp"

using namespace causalbound;
using namespace causalbound::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %-22s %s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> eta_grid_005() {
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(0.05 * k);
  return grid;
}

void check_threshold_table() {
  const auto start = std::chrono::steady_clock::now();
  const auto records = closed_form_table();
  const char* expected[6] = {"95.97", "89.44", "92.39", "81.65", "94.29", "91.02"};
  bool ok = records.size() == 6;
  double worst_gap = 0.0;
  for (std::size_t i = 0; ok && i < records.size(); ++i) {
    const InequalitySpec spec{records[i].id, records[i].m_settings};
    const double bisected = threshold_bisect(witness_curve(spec, records[i].family), 1e-9);
    worst_gap = std::max(worst_gap, std::fabs(bisected - records[i].value));
    if (worst_gap > 1e-6) ok = false;
    if (display_percent(records[i]) != expected[i]) ok = false;
    if (display_percent(bisected, records[i].display_round_up) != expected[i]) ok = false;
  }
  const double elapsed = seconds_since(start);
  criterion(1, "threshold table", ok && elapsed < 1.0,
            fmt("max closed-vs-bisected gap %.2e, %.2fs", worst_gap, elapsed));
}

void check_quantum_optimum() {
  const auto start = std::chrono::steady_clock::now();
  const double exact = 3.0 - 2.0 * std::sqrt(2.0);
  const OptimizeResult best = optimize_violation({Inequality::Cace, 2}, 1.0, 32, 1);
  bool ok = best.violation >= 0.1705 && best.violation <= exact + 1e-6;

  const CausalDistribution reference =
      correlation_from_params(reference_optimum_params());
  const double ref_violation = violation(reference, {Inequality::Cace, 2}, 1.0);
  ok = ok && std::fabs(ref_violation - 0.1716) <= 5e-4 && ace(reference) <= 1e-9;
  const double elapsed = seconds_since(start);
  criterion(2, "quantum optimum", ok && elapsed < 10.0,
            fmt("optimized %.9f, reference angles %.6f", best.violation, ref_violation));
}

void check_classical_audits() {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = eta_grid_005();
  double worst = -1.0;
  bool ok = true;
  for (Inequality id : {Inequality::Cace, Inequality::I222}) {
    const AuditReport report = audit_bound({id, 2}, grid, 10000, 20250808);
    ok = ok && report.passed && report.mixtures_checked == 10000;
    worst = std::max(worst, report.max_violation);
  }
  for (int m : {2, 3, 4}) {
    const AuditReport report = audit_bound({Inequality::Im22, m}, grid, 1000, 20250808);
    ok = ok && report.passed &&
         report.strategies_checked == static_cast<std::size_t>(9 * std::pow(3, m));
    worst = std::max(worst, report.max_violation);
  }
  const double elapsed = seconds_since(start);
  criterion(3, "classical audits", ok && elapsed < 30.0,
            fmt("max violation %.2e over all sweeps, %.2fs", worst, elapsed));
}

void check_ns_lp_maxima() {
  bool ok = true;
  double worst_gap = 0.0;
  auto check = [&](const InequalitySpec& spec, double expected) {
    const double value = ns_max_violation(spec, 1.0).violation;
    worst_gap = std::max(worst_gap, std::fabs(value - expected));
    if (std::fabs(value - expected) > 1e-9) ok = false;
  };
  check({Inequality::Cace, 2}, 0.5);
  check({Inequality::I222, 2}, 0.5);
  for (int m : {2, 3, 4}) check({Inequality::Im22, m}, 1.0 / (2.0 * m - 2.0));
  criterion(4, "ns lp maxima", ok, fmt("max |t* - expected| = %.2e", worst_gap));
}

void check_quantum_bound() {
  const double root2 = std::sqrt(2.0);
  const CausalDistribution tight = tight_quantum_distribution();
  bool ok = std::fabs(eval_qace_rhs(tight)) <= 1e-12 &&
            std::fabs(eval_xi(tight).xi - (root2 - 1.0)) <= 1e-12;

  const CausalDistribution witness = canonical_causal(2);
  ok = ok && std::fabs(eval_qace_rhs(witness) - 0.5) <= 1e-12 &&
       std::fabs(eval_j222(witness, 1.0) - 0.5) <= 1e-12;

  const OptimizeResult qace = optimize_violation({Inequality::Qace, 2}, 1.0, 16, 3);
  ok = ok && qace.violation <= 1e-6;
  criterion(5, "quantum-bound checks", ok,
            fmt("tight rhs %.1e, family max vs quantum bound %.1e",
                std::fabs(eval_qace_rhs(tight)), qace.violation));
}

void check_envelope_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> box(-0.99, 0.99);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double xp = box(rng), yp = box(rng);
    worst = std::max(worst,
                     std::fabs(envelope_max(xp, yp) - envelope_grid_oracle(xp, yp)));
  }
  const double elapsed = seconds_since(start);
  criterion(6, "envelope oracle", worst <= 1e-4 && elapsed < 5.0,
            fmt("max |closed - grid| = %.2e, %.2fs", worst, elapsed));
}

void check_invariants() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  bool ok = true;

  for (int trial = 0; trial < 200; ++trial) {
    QubitCorrelationParams p;
    p.alpha = angle(rng);
    p.theta = {angle(rng), angle(rng)};
    p.phi = {angle(rng), angle(rng)};

    const MeasurementOperators ops = build_measurements(p);
    auto pair_ok = [](const std::array<Mat2, 2>& pair) {
      const double tr0 = (pair[0].m00 + pair[0].m11).real();
      const double det0 = (pair[0].m00 * pair[0].m11 - pair[0].m01 * pair[0].m10).real();
      const double min_eig = 0.5 * tr0 - std::sqrt(std::max(0.0, 0.25 * tr0 * tr0 - det0));
      return std::fabs((pair[0].m00 + pair[1].m00).real() - 1.0) <= 1e-12 &&
             std::fabs((pair[0].m11 + pair[1].m11).real() - 1.0) <= 1e-12 &&
             std::abs(pair[0].m01 + pair[1].m01) <= 1e-12 && min_eig >= -1e-12;
    };
    for (const auto& pair : ops.a_ops) ok = ok && pair_ok(pair);
    for (const auto& pair : ops.b_ops) ok = ok && pair_ok(pair);

    const CausalDistribution d = correlation_from_params(p);
    for (int x = 0; x < 2; ++x) ok = ok && std::fabs(d.click_mass(x) - 1.0) <= 1e-12;
    for (int a = 0; a < 2; ++a)
      ok = ok && std::fabs(d.p_do(0, a) + d.p_do(1, a) - 1.0) <= 1e-12;

    const BellDistribution bell = bell_from_params(p);
    ok = ok && is_nonsignaling(bell, 1e-12);
    const auto do_table = do_from_bell(bell, 1e-12);
    for (int i = 0; i < 4; ++i) ok = ok && std::fabs(do_table[i] - d.do_table[i]) <= 1e-12;
  }

  for (int trial = 0; trial < 100; ++trial) {
    const CausalDistribution d = random_causal(rng);
    const double base = ace(d);
    for (int k = 0; k <= 10; ++k) {
      const double eta = 0.1 * k;
      ok = ok &&
           std::fabs(ace(apply_efficiency(d, DetectionEfficiency(eta))) - eta * base) <=
               1e-12;
    }
    for (double eta : {0.4, 0.8, 1.0})
      ok = ok && std::fabs(eval_im22(d, eta) - eval_i222(d, eta)) <= 1e-13;
  }
  criterion(7, "invariant suite", ok, "completeness, psd, normalization, scaling");
}

} // namespace

int main() {
  check_threshold_table();
  check_quantum_optimum();
  check_classical_audits();
  check_ns_lp_maxima();
  check_quantum_bound();
  check_envelope_oracle();
  check_invariants();
  if (failures == 0)
    std::printf("acceptance: all 7 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
