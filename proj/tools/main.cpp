// Command-line front end: evaluates causal bounds on distribution files,
// audits classical strategies, reproduces the detection-efficiency
// threshold table, sweeps violation curves, optimizes the two-qubit
// family and maximizes over the nonsignaling polytope.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causalbound/distribution.hpp"
#include "causalbound/inequalities.hpp"
#include "causalbound/io.hpp"
#include "causalbound/nonsignaling.hpp"
#include "causalbound/qubit.hpp"
#include "causalbound/strategies.hpp"
#include "causalbound/thresholds.hpp"

namespace {

using namespace causalbound;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

Inequality parse_inequality(const std::string& name) {
  const auto id = inequality_from_string(name);
  if (!id)
    throw std::invalid_argument("unknown inequality \"" + name +
                                "\" (expected cace, i222, im22, qace or j222)");
  return *id;
}

CorrelationFamily parse_family(const std::string& name) {
  if (name == "quantum" || name == "q") return CorrelationFamily::Quantum;
  if (name == "ns" || name == "nonsignaling") return CorrelationFamily::Nonsignaling;
  throw std::invalid_argument("unknown family \"" + name +
                              "\" (expected quantum or ns)");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  const auto c1 = text.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw std::invalid_argument("grid must be start:end:step or a comma list");
    const double start = std::stod(text.substr(0, c1));
    const double end = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (step <= 0.0 || end < start) throw std::invalid_argument("bad grid range");
    const int count = static_cast<int>(std::round((end - start) / step)) + 1;
    for (int i = 0; i < count; ++i) grid.push_back(std::min(start + i * step, end));
    return grid;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    grid.push_back(std::stod(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (grid.empty()) throw std::invalid_argument("empty eta grid");
  return grid;
}

void write_or_print(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    save_text(out_path, text);
}

CausalDistribution require_causal(Distribution dist) {
  if (auto* causal = std::get_if<CausalDistribution>(&dist)) return std::move(*causal);
  throw std::invalid_argument("this command needs a causal table; convert the bell "
                              "table first (see gen canonical-causal)");
}

int cmd_eval(const std::string& file, const std::string& name,
             std::optional<double> eta_opt, double tol, const std::string& out_path) {
  const Inequality id = parse_inequality(name);
  const CausalDistribution dist = require_causal(load_distribution(file, tol));
  const double eta = eta_opt.value_or(dist.eta);
  const InequalitySpec spec{id, id == Inequality::Im22 ? dist.m_settings : 2};

  double rhs = 0.0;
  switch (id) {
    case Inequality::Cace: rhs = eval_cace_rhs(dist); break;
    case Inequality::I222: rhs = eval_i222(dist, eta); break;
    case Inequality::Im22: rhs = eval_im22(dist, eta); break;
    case Inequality::Qace: rhs = eval_qace_rhs(dist); break;
    case Inequality::J222: rhs = eval_j222(dist, eta); break;
  }
  const double lhs = ace(dist);
  const double gap = violation(dist, spec, eta);
  std::printf("inequality  %s\n", std::string(to_string(id)).c_str());
  std::printf("eta         %.12g\n", eta);
  std::printf("rhs         %.12g\n", rhs);
  std::printf("ace         %.12g\n", lhs);
  std::printf("violation   %.12g  (%s)\n", gap, gap > tol ? "violated" : "obeyed");
  if (!out_path.empty()) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "{\n  \"rhs\": %.12g,\n  \"ace\": %.12g,\n  \"violation\": %.12g\n}\n",
                  rhs, lhs, gap);
    save_text(out_path, buf);
  }
  return kExitOk;
}

int cmd_audit(const std::string& name, int m, const std::string& grid_text, int samples,
              std::uint64_t seed, double tol, const std::string& out_path) {
  const Inequality id = parse_inequality(name);
  const InequalitySpec spec{id, id == Inequality::Im22 ? m : 2};
  const std::vector<double> grid = parse_grid(grid_text);
  const AuditReport report = audit_bound(spec, grid, samples, seed, tol);
  std::printf("audit %s  M=%d  grid=%zu points  samples=%d  seed=%llu\n",
              std::string(to_string(id)).c_str(), spec.m_settings, grid.size(), samples,
              static_cast<unsigned long long>(seed));
  const std::string witness = report.argmax_mixture >= 0
                                  ? "mixture #" + std::to_string(report.argmax_mixture)
                                  : report.argmax_strategy.describe();
  std::printf("%s  max violation %.6g at eta=%.4g  witness %s\n",
              report.passed ? "PASS" : "FAIL", report.max_violation, report.argmax_eta,
              witness.c_str());
  if (!report.passed) std::printf("counterexample: %s\n", report.failure.c_str());
  if (!out_path.empty()) save_text(out_path, to_json(report));
  return report.passed ? kExitOk : kExitAssertion;
}

int cmd_thresholds(const std::string& m_list, double tol, double inject,
                   const std::string& out_path) {
  std::vector<int> settings;
  if (!m_list.empty())
    for (double v : parse_grid(m_list)) settings.push_back(static_cast<int>(v));
  bool mismatch = false;
  const std::string table = render_threshold_table(settings, tol, mismatch, inject);
  std::cout << table;
  if (!out_path.empty()) save_text(out_path, table);
  if (mismatch) {
    std::printf("FAIL: closed form and bisection disagree beyond %g\n", tol);
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& name, const std::string& family_name, int m,
              double eta_min, double eta_max, int steps, const std::string& out_path) {
  const Inequality id = parse_inequality(name);
  const CorrelationFamily family = parse_family(family_name);
  const InequalitySpec spec{id, id == Inequality::Im22 ? m : 2};
  const auto rows = sweep(spec, family, eta_min, eta_max, steps);
  write_or_print(out_path, sweep_csv(spec, family, rows));
  return kExitOk;
}

int cmd_optimize(const std::string& name, int m, double eta, int restarts,
                 std::uint64_t seed, const std::string& out_path) {
  const Inequality id = parse_inequality(name);
  const InequalitySpec spec{id, id == Inequality::Im22 ? m : 2};
  const OptimizeResult result = optimize_violation(spec, eta, restarts, seed);
  const QubitCorrelationParams p = result.params;
  std::printf("optimize %s  eta=%.6g  restarts=%d  seed=%llu  evals=%zu\n",
              std::string(to_string(id)).c_str(), eta, restarts,
              static_cast<unsigned long long>(seed), result.evaluations);
  std::printf("violation   %.12g\n", result.violation);
  std::printf("alpha       %.12g\n", p.alpha);
  for (std::size_t x = 0; x < p.theta.size(); ++x)
    std::printf("theta[%zu]    %.12g\n", x, p.theta[x]);
  std::printf("phi[0]      %.12g\nphi[1]      %.12g\n", p.phi[0], p.phi[1]);
  if (!out_path.empty()) save_text(out_path, to_json(p));
  return kExitOk;
}

int cmd_nsmax(const std::string& name, int m, double eta, const std::string& dump_path,
              const std::string& out_path) {
  const Inequality id = parse_inequality(name);
  const InequalitySpec spec{id, id == Inequality::Im22 ? m : 2};
  if (!dump_path.empty()) save_text(dump_path, dump_tableau(build_ns_lp(spec, eta)));
  const NsMaxResult result = ns_max_violation(spec, eta);
  std::printf("nsmax %s  M=%d  eta=%.6g\n", std::string(to_string(id)).c_str(),
              spec.m_settings, eta);
  std::printf("max violation %.12g\n", result.violation);
  if (!out_path.empty()) save_text(out_path, to_json(result.argmax));
  return kExitOk;
}

int cmd_gen(const std::string& name, int m, double eta, const std::string& out_path) {
  if (out_path.empty()) throw std::invalid_argument("gen requires --out <path>");
  std::string text;
  if (name == "canonical-bell") {
    if (eta < 1.0)
      throw std::invalid_argument("efficiency scaling is defined on causal tables; "
                                  "generate canonical-causal instead");
    text = to_json(canonical_ns(m));
  } else {
    CausalDistribution dist;
    if (name == "canonical-causal")
      dist = induced_causal(canonical_ns(m));
    else if (name == "tight-quantum")
      dist = tight_quantum_distribution();
    else if (name == "quantum-optimum")
      dist = correlation_from_params(refined_optimum_params());
    else if (name == "uniform")
      dist = CausalDistribution::uniform(m);
    else
      throw std::invalid_argument(
          "unknown distribution \"" + name +
          "\" (expected canonical-causal, canonical-bell, tight-quantum, "
          "quantum-optimum or uniform)");
    if (eta < 1.0) dist = apply_efficiency(dist, DetectionEfficiency(eta));
    text = to_json(dist);
  }
  save_text(out_path, text);
  std::printf("wrote %s\n", out_path.c_str());
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal-bound violations under imperfect detection efficiency"};
  app.require_subcommand(1);
  app.fallthrough(); // global --out/--seed/--tol may follow the subcommand

  std::string out_path;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  app.add_option("--out", out_path, "Write machine-readable output to this path")
      ->configurable(false);
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_option("--tol", tol, "Numeric tolerance for checks");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a bound on a distribution file");
  std::string eval_file, eval_ineq;
  double eval_eta = -1.0;
  eval_cmd->add_option("file", eval_file, "Distribution JSON file")->required();
  eval_cmd->add_option("inequality", eval_ineq, "cace|i222|im22|qace|j222")->required();
  eval_cmd->add_option("--eta", eval_eta, "Efficiency to evaluate at (default: file's)");

  auto* audit_cmd =
      app.add_subcommand("audit", "Check every deterministic strategy obeys a bound");
  std::string audit_ineq, audit_grid = "0:1:0.05";
  int audit_m = 2, audit_samples = 0;
  audit_cmd->add_option("inequality", audit_ineq, "cace|i222|im22")->required();
  audit_cmd->add_option("--m", audit_m, "Setting count for im22");
  audit_cmd->add_option("--grid", audit_grid, "Eta grid, start:end:step or comma list");
  audit_cmd->add_option("--samples", audit_samples, "Random mixtures to sample");

  auto* thresholds_cmd =
      app.add_subcommand("thresholds", "Closed-form vs bisected threshold table");
  std::string thresholds_m;
  double thresholds_inject = 0.0;
  thresholds_cmd->add_option("--m", thresholds_m, "Extra im22 rows, comma list of M");
  thresholds_cmd->add_option("--inject-error", thresholds_inject,
                             "Perturb one bisected value (failure-path check)")
      ->group(""); // hidden

  auto* sweep_cmd = app.add_subcommand("sweep", "Violation-vs-eta CSV for a witness");
  std::string sweep_ineq, sweep_family;
  int sweep_m = 2, sweep_steps = 21;
  double sweep_min = 0.8, sweep_max = 1.0;
  sweep_cmd->add_option("inequality", sweep_ineq, "cace|i222|im22|qace|j222")->required();
  sweep_cmd->add_option("family", sweep_family, "quantum|ns")->required();
  sweep_cmd->add_option("--m", sweep_m, "Setting count for im22");
  sweep_cmd->add_option("--eta-min", sweep_min, "Lower end of the sweep");
  sweep_cmd->add_option("--eta-max", sweep_max, "Upper end of the sweep");
  sweep_cmd->add_option("--steps", sweep_steps, "Number of rows");

  auto* optimize_cmd =
      app.add_subcommand("optimize", "Maximize violation over the two-qubit family");
  std::string optimize_ineq;
  int optimize_m = 2, optimize_restarts = 32;
  double optimize_eta = 1.0;
  optimize_cmd->add_option("inequality", optimize_ineq, "cace|i222|im22|qace|j222")
      ->required();
  optimize_cmd->add_option("--m", optimize_m, "Setting count for im22");
  optimize_cmd->add_option("--eta", optimize_eta, "Detection efficiency");
  optimize_cmd->add_option("--restarts", optimize_restarts, "Multi-start count");

  auto* nsmax_cmd =
      app.add_subcommand("nsmax", "LP maximum over the nonsignaling polytope");
  std::string nsmax_ineq, nsmax_dump;
  int nsmax_m = 2;
  double nsmax_eta = 1.0;
  nsmax_cmd->add_option("inequality", nsmax_ineq, "cace|i222|im22")->required();
  nsmax_cmd->add_option("--m", nsmax_m, "Setting count for im22");
  nsmax_cmd->add_option("--eta", nsmax_eta, "Detection efficiency");
  nsmax_cmd->add_option("--dump-lp", nsmax_dump, "Write the LP tableau to this path");

  auto* gen_cmd = app.add_subcommand("gen", "Write a catalogued distribution to a file");
  std::string gen_name;
  int gen_m = 2;
  double gen_eta = 1.0;
  gen_cmd->add_option("name", gen_name,
                      "canonical-causal|canonical-bell|tight-quantum|quantum-optimum|uniform")
      ->required();
  gen_cmd->add_option("--m", gen_m, "Setting count");
  gen_cmd->add_option("--eta", gen_eta, "Scale the table to this efficiency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(eval_cmd))
      return cmd_eval(eval_file, eval_ineq,
                      eval_eta < 0.0 ? std::nullopt : std::optional<double>(eval_eta),
                      tol, out_path);
    if (app.got_subcommand(audit_cmd))
      return cmd_audit(audit_ineq, audit_m, audit_grid, audit_samples, seed, tol, out_path);
    if (app.got_subcommand(thresholds_cmd))
      return cmd_thresholds(thresholds_m, 1e-6, thresholds_inject, out_path);
    if (app.got_subcommand(sweep_cmd))
      return cmd_sweep(sweep_ineq, sweep_family, sweep_m, sweep_min, sweep_max,
                       sweep_steps, out_path);
    if (app.got_subcommand(optimize_cmd))
      return cmd_optimize(optimize_ineq, optimize_m, optimize_eta, optimize_restarts,
                          seed, out_path);
    if (app.got_subcommand(nsmax_cmd))
      return cmd_nsmax(nsmax_ineq, nsmax_m, nsmax_eta, nsmax_dump, out_path);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen_name, gen_m, gen_eta, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
  return kExitUsage;
}
