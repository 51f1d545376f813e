#pragma once

#include <string>
#include <variant>

#include "causalbound/distribution.hpp"
#include "causalbound/qubit.hpp"
#include "causalbound/strategies.hpp"

namespace causalbound {

/// Distribution files are JSON documents. Shared fields: "kind"
/// ("causal"|"bell"), "m_settings", "eta". Causal tables carry "obs"
/// (4M values, index (a*2+b)*M + x) and "do" (4 values, index a*2+b),
/// plus an optional "do_source" ("direct"|"bell_marginal"). Bell tables
/// carry "table" (8M values, index ((a*2+b)*M + x)*2 + y). Numbers are
/// written with 12 significant digits.
std::string to_json(const CausalDistribution& dist);
std::string to_json(const BellDistribution& bell);
std::string to_json(const QubitCorrelationParams& params);
std::string to_json(const AuditReport& report);

using Distribution = std::variant<CausalDistribution, BellDistribution>;

/// Parses either table kind. Throws std::invalid_argument on malformed
/// documents and on unnormalized tables, naming the offending setting:
/// negative entries, causal click mass above eta^2, do rows above eta,
/// bell block mass above 1.
Distribution parse_distribution(const std::string& text, double tol = kDefaultTol);

Distribution load_distribution(const std::string& path, double tol = kDefaultTol);

void save_text(const std::string& path, const std::string& text);

} // namespace causalbound
