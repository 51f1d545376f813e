#pragma once

#include <array>
#include <string>
#include <vector>

namespace causalbound {

inline constexpr double kDefaultTol = 1e-9;

/// Detection efficiency eta of a trusted detector pair, in [0,1].
/// Joint click probabilities scale by eta^2, interventional ones by eta.
struct DetectionEfficiency {
  double eta = 1.0;
  explicit DetectionEfficiency(double e);
};

/// Provenance of the interventional table: set directly (deterministic
/// strategies, quantum traces) or recovered from a bipartite marginal.
enum class DoSource { Direct, BellMarginal };

/// One instrumental-variable scenario: an observational table p(a,b|x)
/// with a,b in {0,1} and x in {0..m_settings-1}, the interventional table
/// p(b|do(a)), and the detection efficiency both tables are stated at.
///
/// No-click outcomes are kept implicit: per setting x the click entries
/// sum to at most 1 (to eta^2 when the untrusted-detector constraint
/// holds). Instances are treated as immutable once built.
struct CausalDistribution {
  int m_settings = 2;
  std::vector<double> obs;          // flat, index (a*2 + b)*m_settings + x
  std::array<double, 4> do_table{}; // index a*2 + b  ->  p(b|do(a))
  double eta = 1.0;
  DoSource do_source = DoSource::Direct;

  static CausalDistribution zeros(int m);
  static CausalDistribution uniform(int m);

  double p(int a, int b, int x) const { return obs[(a * 2 + b) * m_settings + x]; }
  double& at(int a, int b, int x) { return obs[(a * 2 + b) * m_settings + x]; }
  double p_do(int b, int a) const { return do_table[a * 2 + b]; }
  double& do_at(int b, int a) { return do_table[a * 2 + b]; }

  /// Total click probability at setting x.
  double click_mass(int x) const;
};

/// Bipartite table p(a,b|x,y), x in {0..m_settings-1}, y in {0,1}, click
/// outcomes only; the no-click outcome carries the residual per (x,y).
struct BellDistribution {
  int m_settings = 2;
  std::vector<double> table; // flat, index ((a*2 + b)*m_settings + x)*2 + y
  double eta = 1.0;

  static BellDistribution zeros(int m);

  double p(int a, int b, int x, int y) const {
    return table[((a * 2 + b) * m_settings + x) * 2 + y];
  }
  double& at(int a, int b, int x, int y) {
    return table[((a * 2 + b) * m_settings + x) * 2 + y];
  }
  double click_mass(int x, int y) const;
};

/// Diagnostic check of the CausalDistribution invariants. Returns one
/// description per failed invariant, empty when everything holds within
/// tol. With assert_click_mass the untrusted-detector constraint
/// (click mass == eta^2 at every x) is checked as well.
std::vector<std::string> validate(const CausalDistribution& dist,
                                  bool assert_click_mass = false,
                                  double tol = kDefaultTol);

/// Embeds a causal table into a bipartite one: entries with y == a come
/// from the causal table, entries with y != a from `completion`. Throws
/// std::invalid_argument when a merged (x,y) block carries click mass
/// beyond 1 + tol or a negative entry.
BellDistribution causal_to_bell(const CausalDistribution& dist,
                                const BellDistribution& completion,
                                double tol = kDefaultTol);

/// True iff both marginal conditions hold within tol for all settings:
/// sum_a' p(a',b|x,y) independent of x and sum_b' p(a,b'|x,y) independent
/// of y.
bool is_nonsignaling(const BellDistribution& bell, double tol = kDefaultTol);

/// Interventional table from a bipartite one: p(b|do(a)) =
/// sum_a' p(a',b|x,a), evaluated at x = 0 and required to be
/// x-independent within tol (throws std::invalid_argument otherwise).
std::array<double, 4> do_from_bell(const BellDistribution& bell,
                                   double tol = kDefaultTol);

/// Scales a table stated at eta = 1 down to efficiency eff: observational
/// entries by eta^2, interventional ones by eta.
CausalDistribution apply_efficiency(const CausalDistribution& dist,
                                    DetectionEfficiency eff);

/// Average causal effect: max over b, a, a' of p(b|do(a)) - p(b|do(a')).
/// Never negative (a == a' is allowed).
double ace(const CausalDistribution& dist);

/// Causal view of a bipartite table: obs(a,b|x) = bell(a,b|x,a), do-table
/// via do_from_bell. Requires the bipartite table to be nonsignaling.
CausalDistribution induced_causal(const BellDistribution& bell,
                                  double tol = kDefaultTol);

} // namespace causalbound
