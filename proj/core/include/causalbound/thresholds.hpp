#pragma once

#include <functional>
#include <string>
#include <vector>

#include "causalbound/inequalities.hpp"

namespace causalbound {

enum class CorrelationFamily { Quantum, Nonsignaling };
std::string_view to_string(CorrelationFamily family);

/// One row of the detection-efficiency catalogue: the bound, the witness
/// family violating it, the closed-form threshold and the violation the
/// witness reaches at eta = 1.
struct ThresholdRecord {
  Inequality id = Inequality::Cace;
  int m_settings = 2;
  CorrelationFamily family = CorrelationFamily::Nonsignaling;
  std::string closed_form;
  double value = 0.0;
  double max_violation = 0.0;
  /// Display convention for the percent column. Thresholds catalogued as
  /// radicals are quoted rounded to nearest; the two stated only
  /// numerically (qace/ns, j222/ns) are quoted as the next sufficient
  /// 0.01%, so the displayed efficiency always suffices.
  bool display_round_up = false;
};

/// Threshold percentage with two decimals under the record's display
/// convention.
std::string display_percent(const ThresholdRecord& record);
std::string display_percent(double value, bool round_up);

/// The six catalogued records, in display order (cace/quantum, cace/ns,
/// i222/quantum, i222/ns, qace/ns, j222/ns), plus one im22/ns record per
/// requested setting count.
std::vector<ThresholdRecord> closed_form_table(const std::vector<int>& im22_settings = {});

/// Violation-vs-eta curve of the catalogued witness: the canonical
/// nonsignaling table or the refined two-setting quantum optimum, scaled
/// by apply_efficiency and evaluated against the bound at that eta.
std::function<double(double)> witness_curve(const InequalitySpec& spec,
                                            CorrelationFamily family);

/// Root of a violation curve on (0,1]. A sign scan at step 1e-3 must find
/// exactly one crossing with curve(0+) < 0 < curve(1); bisection then
/// narrows the bracket to width <= tol. Throws std::invalid_argument when
/// the scan sees zero or multiple crossings.
double threshold_bisect(const std::function<double(double)>& curve, double tol = 1e-8);

struct SweepRow {
  double eta = 0.0;
  double violation = 0.0;
};

/// Witness violations on a uniform eta grid of `steps` points (endpoints
/// included).
std::vector<SweepRow> sweep(const InequalitySpec& spec, CorrelationFamily family,
                            double eta_min, double eta_max, int steps);

/// CSV with header "eta,violation,inequality,family", 12 significant
/// digits, LF line endings.
std::string sweep_csv(const InequalitySpec& spec, CorrelationFamily family,
                      const std::vector<SweepRow>& rows);

/// Closed-form vs bisected threshold table (percent, two decimals, fixed
/// layout). `mismatch` is set when any pair disagrees beyond tol;
/// inject_delta shifts the first bisected value, for exercising the
/// failure path.
std::string render_threshold_table(const std::vector<int>& im22_settings, double tol,
                                   bool& mismatch, double inject_delta = 0.0);

} // namespace causalbound
