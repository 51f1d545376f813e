#include "causalbound/thresholds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "causalbound/nonsignaling.hpp"
#include "causalbound/qubit.hpp"
#include "format.hpp"

namespace causalbound {

using detail::format;

std::string_view to_string(CorrelationFamily family) {
  return family == CorrelationFamily::Quantum ? "quantum" : "nonsignaling";
}

std::vector<ThresholdRecord> closed_form_table(const std::vector<int>& im22_settings) {
  const double r2 = std::sqrt(2.0);
  std::vector<ThresholdRecord> records = {
      {Inequality::Cace, 2, CorrelationFamily::Quantum, "sqrt(2/(5-2*sqrt(2)))",
       std::sqrt(2.0 / (5.0 - 2.0 * r2)), 3.0 - 2.0 * r2, false},
      {Inequality::Cace, 2, CorrelationFamily::Nonsignaling, "sqrt(4/5)",
       std::sqrt(4.0 / 5.0), 0.5, false},
      {Inequality::I222, 2, CorrelationFamily::Quantum, "sqrt(1/(4-2*sqrt(2)))",
       std::sqrt(1.0 / (4.0 - 2.0 * r2)), 3.0 - 2.0 * r2, false},
      {Inequality::I222, 2, CorrelationFamily::Nonsignaling, "sqrt(2/3)",
       std::sqrt(2.0 / 3.0), 0.5, false},
      {Inequality::Qace, 2, CorrelationFamily::Nonsignaling, "2*sqrt(2)/3",
       2.0 * r2 / 3.0, 0.5, true},
      {Inequality::J222, 2, CorrelationFamily::Nonsignaling, "sqrt(2*sqrt(2)-2)",
       std::sqrt(2.0 * r2 - 2.0), 0.5, true},
  };
  for (int m : im22_settings) {
    if (m < 2) throw std::invalid_argument("im22 requires M >= 2");
    ThresholdRecord rec;
    rec.id = Inequality::Im22;
    rec.m_settings = m;
    rec.family = CorrelationFamily::Nonsignaling;
    rec.closed_form = format("sqrt(%d/%d)", 2 * m - 2, 2 * m - 1);
    rec.value = std::sqrt(double(2 * m - 2) / double(2 * m - 1));
    rec.max_violation = 1.0 / double(2 * m - 2);
    records.push_back(rec);
  }
  return records;
}

std::string display_percent(double value, bool round_up) {
  const double pct = round_up ? std::ceil(value * 10000.0) / 100.0 : value * 100.0;
  return format("%.2f", pct);
}

std::string display_percent(const ThresholdRecord& record) {
  return display_percent(record.value, record.display_round_up);
}

std::function<double(double)> witness_curve(const InequalitySpec& spec,
                                            CorrelationFamily family) {
  if (family == CorrelationFamily::Nonsignaling) {
    const int m = spec.id == Inequality::Im22 ? spec.m_settings : 2;
    const CausalDistribution base = induced_causal(canonical_ns(m));
    return [spec, base](double eta) {
      return violation(apply_efficiency(base, DetectionEfficiency(eta)), spec, eta);
    };
  }
  if (spec.id == Inequality::Im22 && spec.m_settings != 2)
    throw std::invalid_argument("no catalogued quantum witness beyond two settings");
  const CausalDistribution base = correlation_from_params(refined_optimum_params());
  return [spec, base](double eta) {
    return violation(apply_efficiency(base, DetectionEfficiency(eta)), spec, eta);
  };
}

double threshold_bisect(const std::function<double(double)>& curve, double tol) {
  constexpr int kScanSteps = 1000;
  double lo = 0.0, hi = 0.0;
  int crossings = 0;
  double prev_eta = 1e-3;
  double prev = curve(prev_eta);
  if (prev >= 0.0)
    throw std::invalid_argument("curve must be negative near eta = 0");
  for (int k = 2; k <= kScanSteps; ++k) {
    const double eta = double(k) / kScanSteps;
    const double value = curve(eta);
    if ((prev < 0.0 && value >= 0.0) || (prev >= 0.0 && value < 0.0)) {
      ++crossings;
      lo = prev_eta;
      hi = eta;
    }
    prev = value;
    prev_eta = eta;
  }
  if (curve(1.0) <= 0.0)
    throw std::invalid_argument("curve must be positive at eta = 1");
  if (crossings == 0) throw std::invalid_argument("no sign change on (0,1]");
  if (crossings > 1)
    throw std::invalid_argument(format("%d sign changes on (0,1], expected one", crossings));

  // Invariant: curve(lo) < 0 <= curve(hi).
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (curve(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SweepRow> sweep(const InequalitySpec& spec, CorrelationFamily family,
                            double eta_min, double eta_max, int steps) {
  if (!(0.0 < eta_min && eta_min < eta_max && eta_max <= 1.0))
    throw std::invalid_argument("need 0 < eta_min < eta_max <= 1");
  if (steps < 2) throw std::invalid_argument("need at least 2 steps");
  const auto curve = witness_curve(spec, family);
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double eta = eta_min + (eta_max - eta_min) * double(i) / double(steps - 1);
    rows.push_back({eta, curve(eta)});
  }
  return rows;
}

std::string sweep_csv(const InequalitySpec& spec, CorrelationFamily family,
                      const std::vector<SweepRow>& rows) {
  std::string csv = "eta,violation,inequality,family\n";
  for (const SweepRow& row : rows) {
    csv += format("%.12g,%.12g,", row.eta, row.violation);
    csv += to_string(spec.id);
    csv += ',';
    csv += to_string(family);
    csv += '\n';
  }
  return csv;
}

std::string render_threshold_table(const std::vector<int>& im22_settings, double tol,
                                   bool& mismatch, double inject_delta) {
  const auto records = closed_form_table(im22_settings);
  mismatch = false;
  std::string out = format("%-6s %-3s %-13s %-10s %-10s %-10s %s\n", "bound", "M",
                           "family", "closed", "bisected", "violation", "expression");
  bool first = true;
  for (const auto& rec : records) {
    const InequalitySpec spec{rec.id, rec.m_settings};
    double bisected = threshold_bisect(witness_curve(spec, rec.family), 1e-9);
    if (first) {
      bisected += inject_delta;
      first = false;
    }
    if (std::fabs(bisected - rec.value) > tol) mismatch = true;
    out += format("%-6s %-3d %-13s %8s%% %8s%% %-10.6f %s\n",
                  std::string(to_string(rec.id)).c_str(), rec.m_settings,
                  std::string(to_string(rec.family)).c_str(),
                  display_percent(rec).c_str(),
                  display_percent(bisected, rec.display_round_up).c_str(),
                  rec.max_violation, rec.closed_form.c_str());
  }
  return out;
}

} // namespace causalbound
