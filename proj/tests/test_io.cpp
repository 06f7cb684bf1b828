// Copyright 2026 The Qerase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qerase/correlations.hpp"
#include "qerase/ensembles.hpp"
#include "qerase/io.hpp"
#include "qerase/version.hpp"
#include "test_support.hpp"

using qerase::ComplexMatrix;
using qerase::DensityOperator;
using qerase::ParseError;
using qerase::Rng;
using qerase::StateFile;
using qerase::SubsystemDims;

TEST_SUITE("io") {

TEST_CASE("state files round-trip exactly") {
  Rng rng(71);
  const SubsystemDims dims({2, 3}, {"A", "B"});
  const DensityOperator rho = qerase::random_density_matrix(dims, 4, rng);

  const std::string text = qerase::to_state_json(rho);
  const StateFile parsed = qerase::parse_state_json(text);
  CHECK(parsed.dims == dims);
  // The writer emits shortest round-trip decimals, so re-reading restores
  // every entry bit for bit.
  CHECK(qerase::max_abs_diff(parsed.matrix, rho.matrix()) == 0.0);
}

TEST_CASE("missing labels default to A, B, C") {
  const std::string text = R"({
    "dims": [2, 2],
    "matrix": [
      [[0.5, 0], [0, 0], [0, 0], [0.5, 0]],
      [[0, 0], [0, 0], [0, 0], [0, 0]],
      [[0, 0], [0, 0], [0, 0], [0, 0]],
      [[0.5, 0], [0, 0], [0, 0], [0.5, 0]]
    ]
  })";
  const StateFile parsed = qerase::parse_state_json(text);
  CHECK(parsed.dims.labels() == std::vector<std::string>{"A", "B"});
  CHECK(parsed.matrix(0, 3).real() == 0.5);
}

TEST_CASE("fixtures on disk parse and validate") {
  for (const char* name :
       {"bell_phi_plus.json", "product_qubit.json", "quantum_classical_noncommuting.json",
        "werner_p025.json", "werner_p050.json", "werner_p075.json"}) {
    const DensityOperator rho = qtest::load_fixture(name);
    CHECK(rho.invariant_violation().empty());
    CHECK(rho.dims().count() == 2);
  }
}

TEST_CASE("malformed state files raise parse errors") {
  CHECK_THROWS_AS(qerase::parse_state_json("not json at all"), ParseError);
  CHECK_THROWS_AS(qerase::parse_state_json(R"({"matrix": []})"), ParseError);
  CHECK_THROWS_AS(qerase::parse_state_json(R"({"dims": [2], "matrix": [[[1, 0]], [[0, 0]]]})"),
                  ParseError);
  // Ragged row.
  CHECK_THROWS_AS(qerase::parse_state_json(
                      R"({"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0]]]})"),
                  ParseError);
  // Entry is not an [re, im] pair.
  CHECK_THROWS_AS(qerase::parse_state_json(
                      R"({"dims": [2], "matrix": [[[1, 0], 0], [[0, 0], [0, 0]]]})"),
                  ParseError);
  // Label count disagrees with dims.
  CHECK_THROWS_AS(
      qerase::parse_state_json(
          R"({"dims": [2], "labels": ["A", "B"], "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]})"),
      ParseError);
  CHECK_THROWS_AS(qerase::read_state_json("/nonexistent/path.json"), ParseError);
}

TEST_CASE("channel files round-trip") {
  Rng rng(72);
  const auto ch = qerase::random_kraus_channel(2, 3, rng);
  const std::string text = qerase::to_channel_json(ch);
  const auto back = qerase::parse_channel_json(text);
  CHECK(back.size() == ch.size());
  CHECK(back.dim_in() == 2);
  for (int k = 0; k < ch.size(); ++k) {
    CHECK(qerase::max_abs_diff(back.ops()[k], ch.ops()[k]) == 0.0);
  }
  CHECK_THROWS_AS(qerase::parse_channel_json(R"({"kraus": []})"), ParseError);
}

TEST_CASE("reports declare version, units, seed and digest") {
  qerase::ReportRecord record;
  record.command = "discord";
  record.input_digest = "deadbeef";
  record.seed = 17;
  qerase::OptimizerConfig cfg;
  record.before = qerase::discord(qtest::bell_state(), "B", cfg);
  record.checks.push_back(qerase::BoundCheckResult::evaluate("demo", 0.0, 1.0, 1e-9));
  record.notes.push_back("note text");

  const auto parsed = nlohmann::json::parse(qerase::to_report_json(record));
  CHECK(parsed.at("version").get<std::string>() == qerase::kVersionString);
  CHECK(parsed.at("units").at("entropy").get<std::string>() == "bits");
  CHECK(parsed.at("input_digest").get<std::string>() == "deadbeef");
  CHECK(parsed.at("seed").get<std::uint64_t>() == 17);
  CHECK(parsed.at("command").get<std::string>() == "discord");
  // A single correlation report lands under "report".
  CHECK(parsed.contains("report"));
  CHECK_FALSE(parsed.contains("after"));
  CHECK(parsed.at("report").at("discord").get<double>() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(parsed.at("checks").at(0).at("name").get<std::string>() == "demo");
  CHECK(parsed.at("checks").at(0).at("satisfied").get<bool>());
  CHECK(parsed.at("notes").at(0).get<std::string>() == "note text");

  // With both states present the report uses before/after.
  record.after = record.before;
  const auto both = nlohmann::json::parse(qerase::to_report_json(record));
  CHECK(both.contains("before"));
  CHECK(both.contains("after"));
  CHECK_FALSE(both.contains("report"));
}

TEST_CASE("monte carlo CSV has a stable shape") {
  qerase::EnsembleConfig cfg;
  cfg.trials = 5;
  cfg.seed = 13;
  qerase::OptimizerConfig opt;
  const auto summary = qerase::monte_carlo_verify(cfg, opt);
  const std::string csv = qerase::to_montecarlo_csv(summary);

  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line ==
        "trial,rank,kraus_count,D_before,D_after,delta_D,delta_S_T,delta_J,slack,"
        "margin_delta_s_t,margin_erasure,margin_generalized_landauer,margin_mi_nonincreasing,"
        "margin_mi_compensation,margin_creation,ok,error");

  int data_rows = 0;
  int comment_rows = 0;
  bool saw_summary = false, saw_totals = false;
  while (std::getline(lines, line)) {
    if (line.rfind("# ", 0) == 0) {
      ++comment_rows;
      saw_summary = saw_summary || line.rfind("# summary seed=13 trials=5 dims=2x2", 0) == 0;
      saw_totals = saw_totals ||
                   line == "# total_violations=0 trial_errors=0 delta_J_negative_beyond_slack=0";
    } else if (!line.empty()) {
      ++data_rows;
    }
  }
  CHECK(data_rows == 5);
  CHECK(saw_summary);
  CHECK(saw_totals);
  CHECK(comment_rows >= 3);
}

TEST_CASE("csv fields never leak separators") {
  qerase::MonteCarloSummary summary;
  summary.seed = 1;
  summary.trials = 1;
  summary.dim_A = summary.dim_B = 2;
  qerase::TrialRecord rec;
  rec.trial = 0;
  rec.ok = false;
  rec.error = "bad, thing\nnext";
  summary.records.push_back(rec);
  const std::string csv = qerase::to_montecarlo_csv(summary);
  CHECK(csv.find("bad; thing;next") != std::string::npos);
}

TEST_CASE("summary JSON mirrors the check statistics") {
  qerase::EnsembleConfig cfg;
  cfg.trials = 4;
  cfg.seed = 21;
  qerase::OptimizerConfig opt;
  const auto summary = qerase::monte_carlo_verify(cfg, opt);
  const auto parsed = nlohmann::json::parse(qerase::to_summary_json(summary));
  CHECK(parsed.at("seed").get<std::uint64_t>() == 21);
  CHECK(parsed.at("trials").get<int>() == 4);
  CHECK(parsed.at("total_violations").get<int>() == 0);
  CHECK(parsed.at("checks").is_array());
  CHECK(parsed.at("checks").size() >= 5);
}

TEST_CASE("format_double survives a parse round-trip") {
  for (double v : {1.0 / 3.0, 0.1, 1e-300, 1e300, std::acos(-1.0), -2.5e-7}) {
    const std::string s = qerase::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(qerase::format_double(0.0) == "0");
}

TEST_CASE("digest matches the reference FNV-1a vectors") {
  CHECK(qerase::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(qerase::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(qerase::fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

}  // TEST_SUITE
