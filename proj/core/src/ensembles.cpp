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

#include "qerase/ensembles.hpp"

#include <Eigen/QR>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qerase/qmath.hpp"

namespace qerase {

namespace {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

struct CheckAccumulator {
  MonteCarloSummary* summary;

  void record(const std::string& name, double margin, bool violated) {
    for (CheckStat& stat : summary->checks) {
      if (stat.name == name) {
        ++stat.evaluations;
        if (violated) {
          ++stat.violations;
          ++summary->total_violations;
        }
        stat.min_margin = std::min(stat.min_margin, margin);
        return;
      }
    }
    CheckStat stat;
    stat.name = name;
    stat.evaluations = 1;
    stat.violations = violated ? 1 : 0;
    stat.min_margin = margin;
    if (violated) ++summary->total_violations;
    summary->checks.push_back(std::move(stat));
  }

  void record(const BoundCheckResult& check) {
    record(check.name, check.margin, !check.satisfied);
  }
};

MonteCarloSummary run_campaign(const EnsembleConfig& cfg, const OptimizerConfig& opt,
                               bool creation_campaign) {
  cfg.validate();
  opt.validate();

  MonteCarloSummary summary;
  summary.seed = cfg.seed;
  summary.trials = cfg.trials;
  summary.dim_A = cfg.dim_A;
  summary.dim_B = cfg.dim_B;
  summary.slack = opt.slack();
  summary.records.reserve(cfg.trials);
  CheckAccumulator acc{&summary};

  const SubsystemDims ab_dims({cfg.dim_A, cfg.dim_B}, {"A", "B"});
  const double creation_budget = 2.0 * opt.slack() + kCheckBaseTol;

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(t));
    TrialRecord rec;
    rec.trial = t;
    rec.slack = opt.slack();
    try {
      DensityOperator state = [&] {
        if (creation_campaign) {
          rec.rank = cfg.dim_A * cfg.dim_B;
          return random_quantum_classical_state(cfg.dim_A, cfg.dim_B, rng);
        }
        rec.rank = rng.uniform_int(1, cfg.dim_A * cfg.dim_B);
        return random_density_matrix(ab_dims, rec.rank, rng);
      }();

      rec.kraus_count = rng.uniform_int(1, cfg.kraus_count);
      const KrausChannel channel = random_kraus_channel(cfg.dim_B, rec.kraus_count, rng);
      const UnitaryDilation dilation = stinespring_dilation(channel, "B", cfg.env_dim);
      const ProcessOutcome outcome = run_process(state, dilation);
      const EntropyLedger ledger = build_ledger(outcome, "B", opt);

      rec.D_before = ledger.D_before;
      rec.D_after = ledger.D_after;
      rec.delta_D = ledger.delta_D;
      rec.delta_S_T = ledger.delta_S_T;
      rec.delta_J = ledger.J_before - ledger.J_after;

      // Total entropy never decreases when the environment starts
      // uncorrelated; exact entropies, so only the base tolerance.
      const BoundCheckResult nonneg = BoundCheckResult::evaluate(
          "total-entropy-nonnegative", 0.0, ledger.delta_S_T, kCheckBaseTol);
      rec.margin_delta_s_t = nonneg.margin;
      acc.record(nonneg);

      const BoundCheckResult erasure = check_erasure_bound(ledger);
      rec.margin_erasure = erasure.margin;
      acc.record(erasure);

      const BoundCheckResult landauer = check_generalized_landauer(ledger);
      rec.margin_generalized_landauer = landauer.margin;
      acc.record(landauer);

      const MutualInfoCompensation mi = check_mutual_info_compensation(outcome);
      rec.margin_mi_nonincreasing = mi.nonincreasing.margin;
      rec.margin_mi_compensation = mi.compensation.margin;
      acc.record(mi.nonincreasing);
      acc.record(mi.compensation);
      acc.record(mi.total_identity);

      if (ledger.D_before <= creation_budget) {
        const BoundCheckResult creation = check_creation_bound(ledger);
        rec.margin_creation = creation.margin;
        acc.record(creation);
      }

      // J moving down under a channel on the measured side is expected;
      // a rise beyond the slack budget is only logged, the measurement
      // class is too narrow to assert monotonicity.
      if (rec.delta_J < -(2.0 * opt.slack() + kCheckBaseTol)) {
        ++summary.delta_J_negative_beyond_slack;
      }
    } catch (const std::exception& ex) {
      rec.ok = false;
      rec.error = ex.what();
      ++summary.trial_errors;
    }
    summary.records.push_back(std::move(rec));
  }
  return summary;
}

}  // namespace

void EnsembleConfig::validate() const {
  if (dim_A < 2 || dim_B < 2) {
    throw std::invalid_argument("EnsembleConfig: subsystem dimensions must be at least 2");
  }
  if (trials < 1) {
    throw std::invalid_argument("EnsembleConfig: trials must be positive");
  }
  if (kraus_count < 1) {
    throw std::invalid_argument("EnsembleConfig: kraus_count must be positive");
  }
  if (env_dim < 1) {
    throw std::invalid_argument("EnsembleConfig: env_dim must be positive");
  }
}

ComplexMatrix haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_random_unitary: dimension must be positive");
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the R-diagonal phases makes the distribution Haar rather than
  // merely unitary.
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= (mag > 0.0) ? (d / mag) : Complex(1.0, 0.0);
  }
  return q;
}

DensityOperator random_density_matrix(int dim, int rank, Rng& rng) {
  return random_density_matrix(SubsystemDims::single("A", dim), rank, rng);
}

DensityOperator random_density_matrix(const SubsystemDims& dims, int rank, Rng& rng) {
  const int dim = dims.total_dim();
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument("random_density_matrix: rank must be in [1, dim]");
  }
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityOperator(std::move(rho), dims);
}

KrausChannel random_kraus_channel(int dim, int kraus_count, Rng& rng) {
  if (kraus_count < 1) {
    throw std::invalid_argument("random_kraus_channel: kraus_count must be positive");
  }
  // The first dim columns of a Haar unitary on dim*kraus_count form a
  // random isometry; its row blocks are the Kraus operators.
  const ComplexMatrix u = haar_random_unitary(dim * kraus_count, rng);
  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus_count);
  for (int k = 0; k < kraus_count; ++k) {
    ops.push_back(u.block(k * dim, 0, dim, dim));
  }
  return KrausChannel(std::move(ops));
}

DensityOperator random_quantum_classical_state(int dim_A, int dim_B, Rng& rng) {
  std::vector<double> weights(dim_B);
  double total = 0.0;
  for (int i = 0; i < dim_B; ++i) {
    // -log(u) draws are a flat Dirichlet after normalization.
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    weights[i] = -std::log(u);
    total += weights[i];
  }

  const SubsystemDims dims({dim_A, dim_B}, {"A", "B"});
  ComplexMatrix rho = ComplexMatrix::Zero(dims.total_dim(), dims.total_dim());
  for (int i = 0; i < dim_B; ++i) {
    const DensityOperator block = random_density_matrix(dim_A, dim_A, rng);
    const double p = weights[i] / total;
    for (int r = 0; r < dim_A; ++r) {
      for (int c = 0; c < dim_A; ++c) {
        rho(r * dim_B + i, c * dim_B + i) = p * block.matrix()(r, c);
      }
    }
  }
  return DensityOperator(std::move(rho), dims);
}

MonteCarloSummary monte_carlo_verify(const EnsembleConfig& cfg, const OptimizerConfig& opt) {
  return run_campaign(cfg, opt, false);
}

MonteCarloSummary monte_carlo_creation(const EnsembleConfig& cfg, const OptimizerConfig& opt) {
  return run_campaign(cfg, opt, true);
}

}  // namespace qerase
