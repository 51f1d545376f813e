#pragma once

#include "causalbound/distribution.hpp"
#include "causalbound/inequalities.hpp"
#include "causalbound/simplex.hpp"

namespace causalbound {

/// The m-setting bipartite table with anti-diagonal mass 1/2 per outcome
/// at (x,y) = (1,0) and diagonal mass 1/2 everywhere else. Nonsignaling,
/// with all single-party marginals equal to 1/2.
BellDistribution canonical_ns(int m);

struct NsMaxResult {
  BellDistribution argmax; // eta = 1 table attaining the optimum
  double violation = 0.0;
};

/// Maximum violation of a classical bound over the nonsignaling polytope
/// at detection efficiency eta, by LP. Variables are the eta = 1 table;
/// efficiency enters through the scaling of the objective coefficients
/// (eta^2 on observational terms, eta on interventional ones). The
/// max-of-differences left side is linearized through an auxiliary
/// variable bounded by all eight (b,a,a') difference combinations.
NsMaxResult ns_max_violation(const InequalitySpec& spec, double eta);

/// The LP behind ns_max_violation, exposed for dump_tableau inspection.
/// Columns 0..8M-1 are the table entries in BellDistribution layout
/// (((a*2+b)*M + x)*2 + y), column 8M is the violation variable.
LinearProgram build_ns_lp(const InequalitySpec& spec, double eta);

} // namespace causalbound
