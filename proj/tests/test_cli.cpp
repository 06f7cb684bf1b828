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

// Black-box tests of the command line tool: every test spawns the real
// binary through the shell and inspects exit codes and emitted files.

#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qerase_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path scratch_file(const std::string& name) { return scratch_dir() / name; }

/// Runs the tool through /bin/sh. `env_prefix` may set variables, e.g.
/// "QERASE_SEED=99 ".
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const fs::path out = scratch_file("stdout_" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_file("stderr_" + std::to_string(counter) + ".txt");
  ++counter;

  const std::string cmd = env_prefix + "'" + std::string(QERASE_CLI_PATH) + "' " + args + " > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

std::string fixture(const std::string& name) { return qtest::fixture_path(name); }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and version exit cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("discord --help").exit_code == 0);
  const auto version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("discord on the maximally entangled fixture") {
  const auto result = run_cli("discord --state '" + fixture("bell_phi_plus.json") + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("command").get<std::string>() == "discord");
  CHECK(std::abs(j.at("report").at("discord").get<double>() - 1.0) < 1e-5);
  CHECK(std::abs(j.at("report").at("mutual_information").get<double>() - 2.0) < 1e-9);
  CHECK(j.at("report").at("measured_side").get<std::string>() == "B");
  CHECK(j.at("units").at("entropy").get<std::string>() == "bits");
  CHECK(j.contains("input_digest"));
}

TEST_CASE("discord supports measuring the other side") {
  const auto result = run_cli("discord --side A --state '" +
                              fixture("quantum_classical_noncommuting.json") + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("report").at("measured_side").get<std::string>() == "A");
  CHECK(j.at("report").at("discord").get<double>() > 0.1);
}

TEST_CASE("reports can be mirrored to a file") {
  const fs::path out = scratch_file("discord_report.json");
  const auto result = run_cli("discord --state '" + fixture("product_qubit.json") + "' --out '" +
                              out.string() + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(std::abs(j.at("report").at("discord").get<double>()) < 1e-6);
  fs::remove(out);
}

TEST_CASE("malformed input exits with the parse code") {
  const fs::path bad = scratch_file("not_json.json");
  write_file(bad, "this is not json{");
  const auto result = run_cli("discord --state '" + bad.string() + "'");
  CHECK(result.exit_code == 2);
  CHECK_FALSE(result.err.empty());
  fs::remove(bad);

  CHECK(run_cli("discord").exit_code == 2);           // missing required flag
  CHECK(run_cli("frobnicate").exit_code == 2);        // unknown subcommand
  CHECK(run_cli("scenario bogus --state x").exit_code == 2);
}

TEST_CASE("unsupported dimensions exit with their own code") {
  const fs::path wide = scratch_file("qubit_times_5.json");
  std::ostringstream rows;
  rows << "[";
  for (int r = 0; r < 10; ++r) {
    rows << (r ? "," : "") << "[";
    for (int c = 0; c < 10; ++c) {
      rows << (c ? "," : "") << "[" << (r == c ? 0.1 : 0.0) << ", 0]";
    }
    rows << "]";
  }
  rows << "]";
  write_file(wide, std::string(R"({"dims": [2, 5], "matrix": )") + rows.str() + "}");
  const auto result = run_cli("discord --state '" + wide.string() + "'");
  CHECK(result.exit_code == 3);
  fs::remove(wide);
}

TEST_CASE("invalid parameters exit with the bad-params code") {
  CHECK(run_cli("discord --side C --state '" + fixture("bell_phi_plus.json") + "'").exit_code ==
        4);
  CHECK(run_cli("scenario thermalize --beta -2 --state '" + fixture("bell_phi_plus.json") + "'")
            .exit_code == 4);
  CHECK(run_cli("scenario bleach --dist 0.7 0.7 --state '" + fixture("bell_phi_plus.json") + "'")
            .exit_code == 4);
}

TEST_CASE("validate accepts fixtures and rejects broken states") {
  const auto good = run_cli("validate --state '" + fixture("werner_p050.json") + "'");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("valid") != std::string::npos);

  const fs::path bad = scratch_file("bad_trace.json");
  write_file(bad, R"({"dims": [2], "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.4, 0]]]})");
  const auto rejected = run_cli("validate --state '" + bad.string() + "'");
  CHECK(rejected.exit_code == 2);
  fs::remove(bad);
}

TEST_CASE("bleach scenario reports all bounds satisfied") {
  const auto result =
      run_cli("scenario bleach --state '" + fixture("bell_phi_plus.json") + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("scenario").get<std::string>() == "bleach");
  CHECK(std::abs(j.at("ledger").at("delta_S_T").get<double>() - 4.0) < 1e-9);
  CHECK(std::abs(j.at("ledger").at("delta_D").get<double>() - 1.0) < 2e-5);
  for (const auto& check : j.at("checks")) {
    CHECK(check.at("satisfied").get<bool>());
  }
  const auto& mi = j.at("mutual_information_compensation");
  CHECK(mi.at("nonincreasing").at("satisfied").get<bool>());
  CHECK(mi.at("compensation").at("satisfied").get<bool>());
  CHECK(mi.at("total_identity").at("satisfied").get<bool>());
  CHECK(j.at("work").at("W_joules").get<double>() >=
        j.at("work").at("W_min_joules").get<double>());
}

TEST_CASE("thermalize scenario reaches the gibbs state") {
  const auto result = run_cli("scenario thermalize --beta 0.693147180559945 --state '" +
                              fixture("bell_phi_plus.json") + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  // Gibbs weights (2/3, 1/3) for H = diag(0, 1) at beta = ln 2.
  CHECK(std::abs(j.at("ledger").at("S_B_after").get<double>() -
                 (std::log2(3.0) - 2.0 / 3.0)) < 1e-9);
  for (const auto& check : j.at("checks")) {
    CHECK(check.at("satisfied").get<bool>());
  }
}

TEST_CASE("landauer scenario balances entropy and energy") {
  const auto result = run_cli("scenario landauer --beta 1.0 --state '" +
                              fixture("bell_phi_plus.json") + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("landauer").at("entropy_sum").at("satisfied").get<bool>());
  CHECK(j.at("landauer").at("energy_erasure").at("satisfied").get<bool>());
  CHECK(std::abs(j.at("landauer").at("energy_conservation_residual").get<double>()) < 1e-12);
}

TEST_CASE("dephase scenario keeps classical states fixed") {
  const auto result = run_cli("scenario dephase --state '" +
                              fixture("quantum_classical_noncommuting.json") + "'");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(std::abs(j.at("ledger").at("delta_D").get<double>()) < 1e-6);
}

TEST_CASE("monte carlo output is byte identical across runs") {
  const fs::path first = scratch_file("mc_first.csv");
  const fs::path second = scratch_file("mc_second.csv");
  const std::string args = "montecarlo --trials 20 --seed 7 --out '";
  CHECK(run_cli(args + first.string() + "'").exit_code == 0);
  CHECK(run_cli(args + second.string() + "'").exit_code == 0);
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  CHECK(a == b);
  CHECK(a.find("trial,rank,kraus_count") == 0);
  fs::remove(first);
  fs::remove(second);
}

TEST_CASE("the seed environment variable overrides the flag") {
  const fs::path out = scratch_file("mc_env_seed.csv");
  const auto result = run_cli("montecarlo --trials 3 --seed 1 --out '" + out.string() + "'",
                              "QERASE_SEED=99 ");
  REQUIRE(result.exit_code == 0);
  CHECK(slurp(out).find("# summary seed=99 trials=3") != std::string::npos);

  // A malformed override is a parse error, not a silent fallback.
  const auto bad = run_cli("montecarlo --trials 3 --out '" + out.string() + "'",
                           "QERASE_SEED=notanumber ");
  CHECK(bad.exit_code == 2);
  fs::remove(out);
}

TEST_CASE("detected violations drive the dedicated exit code") {
  const auto result = run_cli("montecarlo --trials 3 --seed 5 --inject-violation");
  CHECK(result.exit_code == 5);
}

TEST_CASE("creation campaign runs through the cli") {
  const fs::path out = scratch_file("mc_create.csv");
  const auto result =
      run_cli("montecarlo --campaign create --trials 5 --seed 3 --out '" + out.string() + "'");
  REQUIRE(result.exit_code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.find("# check,created-discord-vs-negentropy,5,0,") != std::string::npos);
  fs::remove(out);
}

}  // TEST_SUITE
