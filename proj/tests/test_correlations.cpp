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
#include <stdexcept>

#include "oracles.hpp"
#include "qerase/correlations.hpp"
#include "qerase/ensembles.hpp"
#include "qerase/qmath.hpp"
#include "test_support.hpp"

using qerase::ComplexMatrix;
using qerase::DensityOperator;
using qerase::OptimizerConfig;
using qerase::Rng;
using qerase::SubsystemDims;

namespace {

// Spectrum of the singlet-weighted mixture used by the werner fixtures:
// one eigenvalue (1 + 3p)/4 and three copies of (1 - p)/4, so its mutual
// information has the closed form 2 - S_AB.
double werner_mutual_information(double p) {
  return 2.0 - qtest::shannon_bits(
                   {(1.0 + 3.0 * p) / 4.0, (1.0 - p) / 4.0, (1.0 - p) / 4.0, (1.0 - p) / 4.0});
}

// Every rank-1 basis gives the same conditional entropy h((1 + p)/2), so
// the classical correlation is 1 - h((1 + p)/2) exactly.
double werner_classical_correlation(double p) {
  return 1.0 - qtest::binary_entropy((1.0 + p) / 2.0);
}

}  // namespace

TEST_SUITE("correlations") {

TEST_CASE("mutual information of named states") {
  CHECK(qerase::quantum_mutual_information(qtest::bell_state(), {{"A"}, {"B"}}) ==
        doctest::Approx(2.0).epsilon(1e-12));

  const DensityOperator product = qtest::load_fixture("product_qubit.json");
  CHECK(std::abs(qerase::quantum_mutual_information(product, {{"A"}, {"B"}})) < 1e-12);

  const DensityOperator qc = qtest::load_fixture("quantum_classical_noncommuting.json");
  const double lambda_hi = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
  const double expected = qtest::shannon_bits({lambda_hi, 1.0 - lambda_hi});
  CHECK(qerase::quantum_mutual_information(qc, {{"A"}, {"B"}}) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(qerase::quantum_mutual_information(qc, {{"A"}, {"B"}}) ==
        doctest::Approx(0.600876036693).epsilon(1e-9));
}

TEST_CASE("mutual information requires a partition of the labels") {
  const auto bell = qtest::bell_state();
  CHECK_THROWS_AS(qerase::quantum_mutual_information(bell, {{"A"}, {"A"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qerase::quantum_mutual_information(bell, {{"A"}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(qerase::quantum_mutual_information(bell, {{"A", "B"}, {"B"}}),
                  std::invalid_argument);
}

TEST_CASE("conditional entropy is negative exactly for the entangled fixture") {
  CHECK(qerase::conditional_entropy(qtest::bell_state(), "B") ==
        doctest::Approx(-1.0).epsilon(1e-12));
  const DensityOperator product = qtest::load_fixture("product_qubit.json");
  const double s_a = qerase::von_neumann_entropy(qerase::partial_trace(product, {"A"}));
  CHECK(qerase::conditional_entropy(product, "B") == doctest::Approx(s_a).epsilon(1e-12));
}

TEST_CASE("Bell pair: all correlation is quantum") {
  OptimizerConfig cfg;
  const auto report = qerase::discord(qtest::bell_state(), "B", cfg);
  CHECK(report.mutual_information == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(report.classical_correlation == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(report.discord == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(report.discord - 1.0) < 1e-5);
  CHECK(report.conditional_entropy == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(report.measured_side == "B");
  CHECK(report.optimizer_slack == doctest::Approx(cfg.slack()));
  CHECK(report.measurement_class == "rank1-projective");
}

TEST_CASE("product states carry no correlation at all") {
  OptimizerConfig cfg;
  const auto report = qerase::discord(qtest::load_fixture("product_qubit.json"), "B", cfg);
  CHECK(std::abs(report.mutual_information) < 1e-9);
  CHECK(std::abs(report.classical_correlation) < 1e-9);
  CHECK(std::abs(report.discord) < 1e-6);
}

TEST_CASE("classical-on-B fixture: zero discord toward B, positive toward A") {
  OptimizerConfig cfg;
  const DensityOperator qc = qtest::load_fixture("quantum_classical_noncommuting.json");

  const auto report = qerase::discord(qc, "B", cfg);
  CHECK(std::abs(report.discord) < 1e-6);
  CHECK(report.classical_correlation ==
        doctest::Approx(report.mutual_information).epsilon(1e-6));

  const auto [d_second, d_first] = qerase::discord_asymmetric_check(qc, cfg);
  CHECK(std::abs(d_second) < 1e-6);
  CHECK(d_first > 0.1);
  // Cross-check the measured-A direction against the grid oracle.
  const double brute = qtest::brute_force_min_avg_entropy(qc.matrix(), false, 160);
  const double s_b = 1.0;
  const double i = qerase::quantum_mutual_information(qc, {{"A"}, {"B"}});
  const double d_first_ref = i - (s_b - brute);
  CHECK(d_first == doctest::Approx(d_first_ref).epsilon(2e-4));
}

TEST_CASE("werner mixtures match their closed forms") {
  OptimizerConfig cfg;
  for (double p : {0.25, 0.5, 0.75}) {
    const auto report = qerase::discord(qtest::werner_state(p), "B", cfg);
    CHECK(report.mutual_information ==
          doctest::Approx(werner_mutual_information(p)).epsilon(1e-9));
    CHECK(report.classical_correlation ==
          doctest::Approx(werner_classical_correlation(p)).epsilon(5e-7));
    CHECK(report.discord ==
          doctest::Approx(werner_mutual_information(p) - werner_classical_correlation(p))
              .epsilon(5e-7));
  }
  // Regression pin for one point of the family.
  const auto mid = qerase::discord(qtest::werner_state(0.5), "B", cfg);
  CHECK(mid.discord == doctest::Approx(0.262483183764).epsilon(5e-7));
}

TEST_CASE("werner fixtures on disk agree with the in-memory construction") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, double>>{
           {"werner_p025.json", 0.25}, {"werner_p050.json", 0.5}, {"werner_p075.json", 0.75}}) {
    const DensityOperator from_disk = qtest::load_fixture(name);
    CHECK(qerase::trace_distance(from_disk, qtest::werner_state(p)) < 1e-12);
  }
}

TEST_CASE("report internals are consistent") {
  Rng rng(123);
  const SubsystemDims dims({2, 2}, {"A", "B"});
  const DensityOperator rho = qerase::random_density_matrix(dims, 3, rng);
  OptimizerConfig cfg;
  const auto report = qerase::discord(rho, "B", cfg);

  CHECK(report.discord ==
        doctest::Approx(report.mutual_information - report.classical_correlation)
            .epsilon(1e-13));
  CHECK(report.optimal_measurement.invariant_violation().empty());

  // The reported minimum replays exactly through the measurement it names.
  const auto branches = qerase::measure_branches(rho, report.optimal_measurement);
  double replay = 0.0;
  for (const auto& b : branches) {
    if (!b.negligible) {
      replay += b.probability * qerase::von_neumann_entropy(b.conditional_state);
    }
  }
  CHECK(report.measured_conditional_entropy == doctest::Approx(replay).epsilon(1e-13));

  // classical_correlation standalone agrees with the full report.
  CHECK(qerase::classical_correlation(rho, "B", cfg) ==
        doctest::Approx(report.classical_correlation).epsilon(1e-12));
}

TEST_CASE("pure bipartite states: discord equals the entanglement entropy") {
  Rng rng(77);
  const SubsystemDims dims({2, 2}, {"A", "B"});
  OptimizerConfig cfg;
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix u = qerase::haar_random_unitary(4, rng);
    const ComplexMatrix rho = u.col(0) * u.col(0).adjoint();
    const DensityOperator state(rho, dims);
    const double s_a = qerase::von_neumann_entropy(qerase::partial_trace(state, {"A"}));
    const auto report = qerase::discord(state, "B", cfg);
    CHECK(std::abs(report.discord - s_a) <= 2e-5);
  }
}

TEST_CASE("discord is invariant under local unitaries") {
  Rng rng(321);
  const SubsystemDims dims({2, 2}, {"A", "B"});
  const DensityOperator rho = qerase::random_density_matrix(dims, 3, rng);
  OptimizerConfig cfg;
  const double base = qerase::discord(rho, "B", cfg).discord;

  const ComplexMatrix u = qerase::tensor_product(qerase::haar_random_unitary(2, rng),
                                                 qerase::haar_random_unitary(2, rng));
  const DensityOperator rotated(u * rho.matrix() * u.adjoint(), dims);
  const double turned = qerase::discord(rotated, "B", cfg).discord;
  CHECK(std::abs(base - turned) < 5e-6);
}

}  // TEST_SUITE
