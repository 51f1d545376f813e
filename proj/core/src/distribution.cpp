#include "causalbound/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "format.hpp"

namespace causalbound {

using detail::format;

namespace {

void check_settings(int m) {
  if (m < 2) throw std::invalid_argument("m_settings must be >= 2");
}

} // namespace

DetectionEfficiency::DetectionEfficiency(double e) : eta(e) {
  if (!(e >= 0.0 && e <= 1.0))
    throw std::invalid_argument(format("detection efficiency %g outside [0,1]", e));
}

CausalDistribution CausalDistribution::zeros(int m) {
  check_settings(m);
  CausalDistribution d;
  d.m_settings = m;
  d.obs.assign(4 * static_cast<std::size_t>(m), 0.0);
  d.do_table = {0.0, 0.0, 0.0, 0.0};
  return d;
}

CausalDistribution CausalDistribution::uniform(int m) {
  CausalDistribution d = zeros(m);
  for (double& v : d.obs) v = 0.25;
  d.do_table = {0.5, 0.5, 0.5, 0.5};
  return d;
}

double CausalDistribution::click_mass(int x) const {
  double s = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s += p(a, b, x);
  return s;
}

BellDistribution BellDistribution::zeros(int m) {
  check_settings(m);
  BellDistribution bell;
  bell.m_settings = m;
  bell.table.assign(8 * static_cast<std::size_t>(m), 0.0);
  return bell;
}

double BellDistribution::click_mass(int x, int y) const {
  double s = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s += p(a, b, x, y);
  return s;
}

std::vector<std::string> validate(const CausalDistribution& dist,
                                  bool assert_click_mass, double tol) {
  std::vector<std::string> findings;
  if (dist.m_settings < 2) {
    findings.push_back(format("m_settings = %d, must be >= 2", dist.m_settings));
    return findings;
  }
  if (dist.obs.size() != 4 * static_cast<std::size_t>(dist.m_settings)) {
    findings.push_back("obs table has the wrong size");
    return findings;
  }
  if (!(dist.eta >= -tol && dist.eta <= 1.0 + tol))
    findings.push_back(format("eta = %g outside [0,1]", dist.eta));

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < dist.m_settings; ++x)
        if (dist.p(a, b, x) < -tol)
          findings.push_back(
              format("negativity: obs(%d,%d|%d) = %g", a, b, x, dist.p(a, b, x)));

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (dist.p_do(b, a) < -tol)
        findings.push_back(
            format("negativity: do(%d|%d) = %g", b, a, dist.p_do(b, a)));

  const double eta2 = dist.eta * dist.eta;
  for (int x = 0; x < dist.m_settings; ++x) {
    const double mass = dist.click_mass(x);
    if (mass > 1.0 + tol)
      findings.push_back(format("click mass: setting x=%d sums to %g > 1", x, mass));
    if (assert_click_mass && std::fabs(mass - eta2) > tol)
      findings.push_back(format(
          "click constraint: setting x=%d has mass %g, expected eta^2 = %g", x, mass, eta2));
  }

  for (int a = 0; a < 2; ++a) {
    const double row = dist.p_do(0, a) + dist.p_do(1, a);
    if (row > 1.0 + tol)
      findings.push_back(format("do row: a=%d sums to %g > 1", a, row));
    if (std::fabs(dist.eta - 1.0) <= tol && std::fabs(row - 1.0) > tol)
      findings.push_back(format("do row: a=%d sums to %g, expected 1 at eta=1", a, row));
  }
  return findings;
}

BellDistribution causal_to_bell(const CausalDistribution& dist,
                                const BellDistribution& completion, double tol) {
  if (completion.m_settings != dist.m_settings)
    throw std::invalid_argument("completion has a different number of settings");
  BellDistribution bell = BellDistribution::zeros(dist.m_settings);
  bell.eta = dist.eta;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < dist.m_settings; ++x)
        for (int y = 0; y < 2; ++y)
          bell.at(a, b, x, y) = (y == a) ? dist.p(a, b, x) : completion.p(a, b, x, y);

  for (int x = 0; x < dist.m_settings; ++x)
    for (int y = 0; y < 2; ++y) {
      const double mass = bell.click_mass(x, y);
      if (mass > 1.0 + tol)
        throw std::invalid_argument(format(
            "normalization: merged block (x=%d,y=%d) carries click mass %g > 1", x, y, mass));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (bell.p(a, b, x, y) < -tol)
            throw std::invalid_argument(format(
                "normalization: merged entry (%d,%d|%d,%d) = %g is negative", a, b, x, y,
                bell.p(a, b, x, y)));
    }
  return bell;
}

bool is_nonsignaling(const BellDistribution& bell, double tol) {
  const int m = bell.m_settings;
  // B's marginal of b must not depend on x.
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b) {
      double ref = 0.0;
      for (int ap = 0; ap < 2; ++ap) ref += bell.p(ap, b, 0, y);
      for (int x = 1; x < m; ++x) {
        double s = 0.0;
        for (int ap = 0; ap < 2; ++ap) s += bell.p(ap, b, x, y);
        if (std::fabs(s - ref) > tol) return false;
      }
    }
  // A's marginal of a must not depend on y.
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < 2; ++a) {
      double s0 = 0.0, s1 = 0.0;
      for (int bp = 0; bp < 2; ++bp) {
        s0 += bell.p(a, bp, x, 0);
        s1 += bell.p(a, bp, x, 1);
      }
      if (std::fabs(s0 - s1) > tol) return false;
    }
  return true;
}

std::array<double, 4> do_from_bell(const BellDistribution& bell, double tol) {
  std::array<double, 4> result{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double ref = 0.0;
      for (int ap = 0; ap < 2; ++ap) ref += bell.p(ap, b, 0, a);
      for (int x = 1; x < bell.m_settings; ++x) {
        double s = 0.0;
        for (int ap = 0; ap < 2; ++ap) s += bell.p(ap, b, x, a);
        if (std::fabs(s - ref) > tol)
          throw std::invalid_argument(format(
              "signaling: do(%d|%d) marginal differs by %g between x=0 and x=%d", b, a,
              s - ref, x));
      }
      result[a * 2 + b] = ref;
    }
  return result;
}

CausalDistribution apply_efficiency(const CausalDistribution& dist,
                                    DetectionEfficiency eff) {
  if (std::fabs(dist.eta - 1.0) > kDefaultTol)
    throw std::invalid_argument("apply_efficiency expects a table stated at eta = 1");
  CausalDistribution scaled = dist;
  const double eta2 = eff.eta * eff.eta;
  for (double& v : scaled.obs) v *= eta2;
  for (double& v : scaled.do_table) v *= eff.eta;
  scaled.eta = eff.eta;
  return scaled;
}

double ace(const CausalDistribution& dist) {
  double best = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        best = std::max(best, dist.p_do(b, a) - dist.p_do(b, ap));
  return best;
}

CausalDistribution induced_causal(const BellDistribution& bell, double tol) {
  CausalDistribution dist = CausalDistribution::zeros(bell.m_settings);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < bell.m_settings; ++x)
        dist.at(a, b, x) = bell.p(a, b, x, a);
  dist.do_table = do_from_bell(bell, tol);
  dist.eta = bell.eta;
  dist.do_source = DoSource::BellMarginal;
  return dist;
}

} // namespace causalbound
