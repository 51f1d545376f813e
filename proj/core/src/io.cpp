#include "causalbound/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "format.hpp"

namespace causalbound {

using detail::format;
using nlohmann::json;

namespace {

double round_sig(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

json array_of(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(round_sig(v));
  return arr;
}

std::vector<double> array_field(const json& doc, const char* name, std::size_t size) {
  if (!doc.contains(name) || !doc[name].is_array())
    throw std::invalid_argument(format("missing array field \"%s\"", name));
  const auto& arr = doc[name];
  if (arr.size() != size)
    throw std::invalid_argument(
        format("field \"%s\" has %zu entries, expected %zu", name, arr.size(), size));
  std::vector<double> out;
  out.reserve(size);
  for (const auto& v : arr) {
    if (!v.is_number()) throw std::invalid_argument(format("non-numeric entry in \"%s\"", name));
    out.push_back(v.get<double>());
  }
  return out;
}

} // namespace

std::string to_json(const CausalDistribution& dist) {
  json doc;
  doc["kind"] = "causal";
  doc["m_settings"] = dist.m_settings;
  doc["eta"] = round_sig(dist.eta);
  doc["obs"] = array_of(dist.obs);
  doc["do"] = array_of({dist.do_table.begin(), dist.do_table.end()});
  doc["do_source"] = dist.do_source == DoSource::Direct ? "direct" : "bell_marginal";
  return doc.dump(2) + "\n";
}

std::string to_json(const BellDistribution& bell) {
  json doc;
  doc["kind"] = "bell";
  doc["m_settings"] = bell.m_settings;
  doc["eta"] = round_sig(bell.eta);
  doc["table"] = array_of(bell.table);
  return doc.dump(2) + "\n";
}

std::string to_json(const QubitCorrelationParams& params) {
  json doc;
  doc["alpha"] = round_sig(params.alpha);
  doc["theta"] = array_of(params.theta);
  doc["phi"] = array_of({params.phi[0], params.phi[1]});
  return doc.dump(2) + "\n";
}

std::string to_json(const AuditReport& report) {
  json doc;
  doc["passed"] = report.passed;
  doc["tol"] = round_sig(report.tol);
  doc["max_violation"] = round_sig(report.max_violation);
  doc["argmax_eta"] = round_sig(report.argmax_eta);
  json fa = json::array(), fb = json::array();
  for (std::uint8_t v : report.argmax_strategy.fa) fa.push_back(int(v));
  for (std::uint8_t v : report.argmax_strategy.fb) fb.push_back(int(v));
  doc["argmax_strategy"] = {{"fa", fa}, {"fb", fb}};
  doc["argmax_mixture"] = report.argmax_mixture;
  doc["strategies_checked"] = report.strategies_checked;
  doc["mixtures_checked"] = report.mixtures_checked;
  doc["min_click_fraction"] = round_sig(report.min_click_fraction);
  if (!report.passed) doc["failure"] = report.failure;
  return doc.dump(2) + "\n";
}

Distribution parse_distribution(const std::string& text, double tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(format("not a valid JSON document: %s", e.what()));
  }
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw std::invalid_argument("missing string field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  if (!doc.contains("m_settings") || !doc["m_settings"].is_number_integer())
    throw std::invalid_argument("missing integer field \"m_settings\"");
  const int m = doc["m_settings"].get<int>();
  if (m < 2) throw std::invalid_argument("m_settings must be >= 2");
  double eta = 1.0;
  if (doc.contains("eta")) {
    if (!doc["eta"].is_number()) throw std::invalid_argument("field \"eta\" must be a number");
    eta = doc["eta"].get<double>();
  }
  if (!(eta >= 0.0 && eta <= 1.0 + tol))
    throw std::invalid_argument(format("eta = %g outside [0,1]", eta));

  if (kind == "causal") {
    CausalDistribution dist = CausalDistribution::zeros(m);
    dist.obs = array_field(doc, "obs", 4 * static_cast<std::size_t>(m));
    const auto do_values = array_field(doc, "do", 4);
    std::copy(do_values.begin(), do_values.end(), dist.do_table.begin());
    dist.eta = eta;
    if (doc.contains("do_source")) {
      const std::string src = doc["do_source"].get<std::string>();
      if (src == "direct")
        dist.do_source = DoSource::Direct;
      else if (src == "bell_marginal")
        dist.do_source = DoSource::BellMarginal;
      else
        throw std::invalid_argument(format("unknown do_source \"%s\"", src.c_str()));
    }

    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int x = 0; x < m; ++x)
          if (dist.p(a, b, x) < -tol)
            throw std::invalid_argument(
                format("setting x=%d: obs(%d,%d|%d) = %g is negative", x, a, b, x,
                       dist.p(a, b, x)));
    const double eta2 = eta * eta;
    for (int x = 0; x < m; ++x)
      if (dist.click_mass(x) > eta2 + tol)
        throw std::invalid_argument(
            format("setting x=%d: click mass %g exceeds eta^2 = %g", x,
                   dist.click_mass(x), eta2));
    for (int a = 0; a < 2; ++a) {
      const double row = dist.p_do(0, a) + dist.p_do(1, a);
      if (dist.p_do(0, a) < -tol || dist.p_do(1, a) < -tol)
        throw std::invalid_argument(format("do row a=%d has a negative entry", a));
      if (row > eta + tol)
        throw std::invalid_argument(
            format("do row a=%d sums to %g, exceeds eta = %g", a, row, eta));
    }
    return dist;
  }
  if (kind == "bell") {
    BellDistribution bell = BellDistribution::zeros(m);
    bell.table = array_field(doc, "table", 8 * static_cast<std::size_t>(m));
    bell.eta = eta;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < 2; ++y) {
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if (bell.p(a, b, x, y) < -tol)
              throw std::invalid_argument(
                  format("setting (x=%d,y=%d): entry (%d,%d) is negative", x, y, a, b));
        if (bell.click_mass(x, y) > 1.0 + tol)
          throw std::invalid_argument(
              format("setting (x=%d,y=%d): click mass %g exceeds 1", x, y,
                     bell.click_mass(x, y)));
      }
    return bell;
  }
  throw std::invalid_argument(format("unknown kind \"%s\"", kind.c_str()));
}

Distribution load_distribution(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(format("cannot open %s", path.c_str()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_distribution(buffer.str(), tol);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(format("cannot write %s", path.c_str()));
  out << text;
}

} // namespace causalbound
