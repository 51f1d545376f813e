#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "causalbound/io.hpp"
#include "test_support.hpp"

using namespace causalbound;
using namespace causalbound::testing;

TEST_CASE("causal tables survive a serialization round trip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    CausalDistribution d = random_causal(rng, 2 + trial % 3);
    if (trial % 2) d = apply_efficiency(d, DetectionEfficiency(0.9));
    const Distribution parsed = parse_distribution(to_json(d));
    const auto& back = std::get<CausalDistribution>(parsed);
    CHECK(back.m_settings == d.m_settings);
    CHECK(std::fabs(back.eta - d.eta) <= 1e-11);
    for (std::size_t i = 0; i < d.obs.size(); ++i)
      CHECK(std::fabs(back.obs[i] - d.obs[i]) <= 1e-11);
    for (int i = 0; i < 4; ++i)
      CHECK(std::fabs(back.do_table[i] - d.do_table[i]) <= 1e-11);
    CHECK(back.do_source == d.do_source);
  }
}

TEST_CASE("bell tables survive a serialization round trip") {
  const BellDistribution bell = canonical_ns(3);
  const Distribution parsed = parse_distribution(to_json(bell));
  const auto& back = std::get<BellDistribution>(parsed);
  REQUIRE(back.m_settings == 3);
  for (std::size_t i = 0; i < bell.table.size(); ++i)
    CHECK(back.table[i] == doctest::Approx(bell.table[i]).epsilon(1e-12));
}

TEST_CASE("save and load through a file") {
  const CausalDistribution d = canonical_causal(2);
  const std::string path = "io_roundtrip_test.json";
  save_text(path, to_json(d));
  const Distribution loaded = load_distribution(path);
  const auto& back = std::get<CausalDistribution>(loaded);
  for (std::size_t i = 0; i < d.obs.size(); ++i)
    CHECK(back.obs[i] == doctest::Approx(d.obs[i]).epsilon(1e-12));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_distribution("io_missing_file.json"), std::invalid_argument);
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_distribution("not json at all"), std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"spooky","m_settings":2})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"causal","m_settings":1})"),
                  std::invalid_argument);
  // Wrong array length (m_settings = 2 needs 8 obs entries).
  CHECK_THROWS_AS(
      parse_distribution(
          R"({"kind":"causal","m_settings":2,"eta":1,"obs":[1,0,0],"do":[1,0,0,1]})"),
      std::invalid_argument);
}

TEST_CASE("parser names the offending setting") {
  // Negative entry: obs(0,0|1) = -0.1.
  try {
    parse_distribution(
        R"({"kind":"causal","m_settings":2,"eta":1,
            "obs":[0.5,-0.1, 0,0.4, 0,0, 0.5,0.5],
            "do":[0.5,0.5,0.5,0.5]})");
    FAIL("expected a rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x=1") != std::string::npos);
  }

  // Click mass 1 at x = 0 under stated eta 0.9 (budget 0.81).
  try {
    parse_distribution(
        R"({"kind":"causal","m_settings":2,"eta":0.9,
            "obs":[0.5,0, 0,0.405, 0,0, 0.5,0.405],
            "do":[0.45,0.45,0.45,0.45]})");
    FAIL("expected a rejection");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("x=0") != std::string::npos);
    CHECK(what.find("eta^2") != std::string::npos);
  }

  // Bell block (x=1, y=0) overfilled to 1.2.
  try {
    parse_distribution(
        R"({"kind":"bell","m_settings":2,"eta":1,
            "table":[0.5,0,0.6,0, 0,0,0.6,0, 0,0,0,0, 0,0.5,0,0.5]})");
    FAIL("expected a rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x=1") != std::string::npos);
  }
}

TEST_CASE("parser rejects do rows beyond the stated efficiency") {
  CHECK_THROWS_AS(parse_distribution(
                      R"({"kind":"causal","m_settings":2,"eta":0.5,
                          "obs":[0.25,0, 0,0, 0,0, 0,0.25],
                          "do":[0.5,0.5,0.25,0.25]})"),
                  std::invalid_argument);
}

TEST_CASE("angle records serialize with their fields") {
  QubitCorrelationParams p;
  p.alpha = 0.7165;
  p.theta = {0.2447, -1.5707963267948966};
  p.phi = {0.675, -0.675};
  const std::string text = to_json(p);
  CHECK(text.find("\"alpha\"") != std::string::npos);
  CHECK(text.find("\"theta\"") != std::string::npos);
  CHECK(text.find("\"phi\"") != std::string::npos);
  CHECK(text.find("0.7165") != std::string::npos);
}

TEST_CASE("audit reports serialize with their verdict") {
  AuditReport report;
  report.passed = true;
  report.max_violation = -0.25;
  report.argmax_strategy.fa = {0, 1};
  report.argmax_strategy.fb = {0, kNoClick};
  const std::string text = to_json(report);
  CHECK(text.find("\"passed\": true") != std::string::npos);
  CHECK(text.find("\"max_violation\"") != std::string::npos);
  CHECK(text.find("\"fa\"") != std::string::npos);
}
