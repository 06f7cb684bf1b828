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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qerase/channels.hpp"
#include "qerase/ledger.hpp"
#include "qerase/rng.hpp"
#include "qerase/state.hpp"

namespace qerase {

struct EnsembleConfig {
  std::uint64_t seed = 1;
  int dim_A = 2;
  int dim_B = 2;
  int env_dim = 4;      // dilation environment dimension (>= sampled Kraus count)
  int kraus_count = 4;  // sampled channels carry 1..kraus_count Kraus operators
  int trials = 1000;

  void validate() const;
};

/// QR-based Haar sample from a complex Gaussian matrix, R-diagonal phase
/// corrected. U^dag U = I within 1e-10.
ComplexMatrix haar_random_unitary(int dim, Rng& rng);

/// G G^dag / Tr(G G^dag) from a dim x rank complex Gaussian G
/// (Hilbert-Schmidt-induced measure at full rank).
DensityOperator random_density_matrix(int dim, int rank, Rng& rng);
DensityOperator random_density_matrix(const SubsystemDims& dims, int rank, Rng& rng);

/// Haar-random isometry carved into `kraus_count` square blocks.
KrausChannel random_kraus_channel(int dim, int kraus_count, Rng& rng);

/// sum_i p_i rho_i^A (x) |i><i|_B with Dirichlet-like weights and random
/// full-rank blocks; zero discord with respect to measuring B.
DensityOperator random_quantum_classical_state(int dim_A, int dim_B, Rng& rng);

/// Everything recorded about one Monte Carlo trial. Margins are
/// rhs - lhs of the corresponding checks; a negative margin beyond the
/// check tolerance is a violation.
struct TrialRecord {
  int trial = 0;
  int rank = 0;
  int kraus_count = 0;
  double D_before = 0.0, D_after = 0.0, delta_D = 0.0;
  double delta_S_T = 0.0;
  double delta_J = 0.0;
  double slack = 0.0;
  double margin_delta_s_t = 0.0;
  double margin_erasure = 0.0;
  double margin_generalized_landauer = 0.0;
  double margin_mi_nonincreasing = 0.0;
  double margin_mi_compensation = 0.0;
  std::optional<double> margin_creation;  // evaluated only on zero-discord starts
  bool ok = true;
  std::string error;
};

struct CheckStat {
  std::string name;
  int evaluations = 0;
  int violations = 0;
  double min_margin = 0.0;
};

struct MonteCarloSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  int dim_A = 0, dim_B = 0;
  double slack = 0.0;
  std::vector<CheckStat> checks;
  int delta_J_negative_beyond_slack = 0;  // measurement-class caveat counter
  int trial_errors = 0;
  int total_violations = 0;
  std::vector<TrialRecord> records;
};

/// Per trial: sample rho_AB (uniform rank), sample a channel on B, dilate,
/// run, build the ledger and evaluate every bound. Individual trial
/// failures are recorded, not thrown. Identical (cfg, opt) give identical
/// summaries.
MonteCarloSummary monte_carlo_verify(const EnsembleConfig& cfg, const OptimizerConfig& opt);

/// Creation campaign: trials start from random quantum-classical states
/// (zero discord on B) so the creation bound applies in every trial.
MonteCarloSummary monte_carlo_creation(const EnsembleConfig& cfg, const OptimizerConfig& opt);

}  // namespace qerase
