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

#include "qerase/ledger.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qerase/qmath.hpp"

namespace qerase {

namespace {

double expectation(const ComplexMatrix& rho, const ComplexMatrix& observable) {
  return (rho * observable).trace().real();
}

}  // namespace

BoundCheckResult BoundCheckResult::evaluate(std::string name, double lhs, double rhs,
                                            double tolerance) {
  BoundCheckResult r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.margin = rhs - lhs;
  r.satisfied = lhs <= rhs + tolerance;
  return r;
}

void PhysicalConstants::validate() const {
  if (!(boltzmann_k > 0.0) || !(temperature_T > 0.0)) {
    throw std::invalid_argument("PhysicalConstants: k and T must be positive");
  }
}

EntropyLedger build_ledger(const ProcessOutcome& outcome, const std::string& side,
                           const OptimizerConfig& cfg) {
  const std::vector<std::string> ab_labels = outcome.reduced_AB_after.dims().labels();
  const DensityOperator ab_before = partial_trace(outcome.state_before, ab_labels);
  const DensityOperator e_before = partial_trace(outcome.state_before, {outcome.env_label});

  if (!ab_before.dims().has(side)) {
    throw std::invalid_argument("build_ledger: system has no subsystem '" + side + "'");
  }
  std::vector<std::string> rest;
  for (const auto& label : ab_labels) {
    if (label != side) rest.push_back(label);
  }
  if (rest.empty()) {
    throw std::invalid_argument("build_ledger: system must have a subsystem besides '" + side +
                                "'");
  }

  const CorrelationReport before = discord(ab_before, side, cfg);
  const CorrelationReport after = discord(outcome.reduced_AB_after, side, cfg);

  EntropyLedger ledger;
  ledger.S_AB_before = von_neumann_entropy(ab_before);
  ledger.S_AB_after = von_neumann_entropy(outcome.reduced_AB_after);
  ledger.S_E_before = von_neumann_entropy(e_before);
  ledger.S_E_after = von_neumann_entropy(outcome.reduced_E_after);
  ledger.delta_S_T = (ledger.S_AB_after + ledger.S_E_after) -
                     (ledger.S_AB_before + ledger.S_E_before);
  ledger.D_before = before.discord;
  ledger.D_after = after.discord;
  ledger.delta_D = before.discord - after.discord;
  ledger.J_before = before.classical_correlation;
  ledger.J_after = after.classical_correlation;
  ledger.I_before = before.mutual_information;
  ledger.I_after = after.mutual_information;
  ledger.S_B_before = von_neumann_entropy(partial_trace(ab_before, {side}));
  ledger.S_B_after = von_neumann_entropy(partial_trace(outcome.reduced_AB_after, {side}));
  ledger.conditional_S_B_given_A =
      ledger.S_AB_before - von_neumann_entropy(partial_trace(ab_before, rest));
  ledger.optimizer_slack = cfg.slack();
  ledger.measured_side = side;
  return ledger;
}

BoundCheckResult check_erasure_bound(const EntropyLedger& ledger) {
  return BoundCheckResult::evaluate("erased-discord-vs-total-entropy", ledger.delta_D,
                                    ledger.delta_S_T, ledger.check_tolerance());
}

ErasureWork erasure_work(const EntropyLedger& ledger, const PhysicalConstants& consts) {
  consts.validate();
  const double kt_ln2 = consts.boltzmann_k * consts.temperature_T * std::numbers::ln2;
  return ErasureWork{kt_ln2 * ledger.delta_S_T, kt_ln2 * ledger.delta_D};
}

BoundCheckResult check_creation_bound(const EntropyLedger& ledger) {
  if (ledger.D_before > ledger.check_tolerance()) {
    std::ostringstream os;
    os << "check_creation_bound: initial discord " << ledger.D_before
       << " exceeds the zero budget " << ledger.check_tolerance();
    throw std::invalid_argument(os.str());
  }
  return BoundCheckResult::evaluate("created-discord-vs-negentropy", -ledger.delta_S_T,
                                    ledger.D_after, ledger.check_tolerance());
}

BoundCheckResult check_generalized_landauer(const EntropyLedger& ledger) {
  const double lhs = ledger.delta_D + ledger.conditional_S_B_given_A - ledger.S_B_before;
  const double rhs = (ledger.S_B_after - ledger.S_B_before) +
                     (ledger.S_E_after - ledger.S_E_before);
  return BoundCheckResult::evaluate("erasure-cost-with-memory", lhs, rhs,
                                    ledger.check_tolerance());
}

MutualInfoCompensation check_mutual_info_compensation(const ProcessOutcome& outcome) {
  const std::vector<std::string> ab_labels = outcome.reduced_AB_after.dims().labels();
  if (ab_labels.size() != 2) {
    throw std::invalid_argument(
        "check_mutual_info_compensation: system must be bipartite");
  }
  const DensityOperator ab_before = partial_trace(outcome.state_before, ab_labels);
  const std::pair<std::vector<std::string>, std::vector<std::string>> ab_cut{{ab_labels[0]},
                                                                             {ab_labels[1]}};
  const double i_before = quantum_mutual_information(ab_before, ab_cut);
  const double i_after = quantum_mutual_information(outcome.reduced_AB_after, ab_cut);
  const double delta_i = i_before - i_after;

  const double i_sys_env = quantum_mutual_information(
      outcome.state_after, {ab_labels, {outcome.env_label}});

  const DensityOperator e_before = partial_trace(outcome.state_before, {outcome.env_label});
  const double delta_s_t =
      (von_neumann_entropy(outcome.reduced_AB_after) +
       von_neumann_entropy(outcome.reduced_E_after)) -
      (von_neumann_entropy(ab_before) + von_neumann_entropy(e_before));

  MutualInfoCompensation out;
  out.nonincreasing =
      BoundCheckResult::evaluate("local-channel-cannot-raise-mi", 0.0, delta_i, kCheckBaseTol);
  out.compensation = BoundCheckResult::evaluate("lost-mi-vs-system-env-mi", delta_i, i_sys_env,
                                                kCheckBaseTol);
  out.total_identity = BoundCheckResult::evaluate(
      "system-env-mi-equals-total-entropy", std::abs(i_sys_env - delta_s_t), 0.0,
      kCheckBaseTol);
  return out;
}

LandauerReport check_landauer_uncorrelated(const DensityOperator& state_B,
                                           const ComplexMatrix& bath_H, double beta,
                                           const UnitaryDilation& dilation,
                                           const std::optional<ComplexMatrix>& system_H) {
  if (beta <= 0.0) {
    throw std::invalid_argument("check_landauer_uncorrelated: beta must be positive");
  }
  const DensityOperator equilibrium =
      thermal_state(bath_H, beta, dilation.env_state.dims());
  if (max_abs_diff(equilibrium.matrix(), dilation.env_state.matrix()) > 1e-9) {
    throw std::invalid_argument(
        "check_landauer_uncorrelated: dilation environment is not the thermal state of the "
        "given bath Hamiltonian");
  }
  if (state_B.dims().count() != 1 || !state_B.dims().has(dilation.acts_on)) {
    throw std::invalid_argument(
        "check_landauer_uncorrelated: state must be the single subsystem the dilation acts "
        "on");
  }

  const ProcessOutcome outcome = run_process(state_B, dilation);

  LandauerReport report;
  report.initial_system_entropy = von_neumann_entropy(state_B);
  report.final_system_entropy = von_neumann_entropy(outcome.reduced_AB_after);
  report.erased_bits = report.initial_system_entropy - report.final_system_entropy;

  const double s_e_before = von_neumann_entropy(equilibrium);
  const double s_e_after = von_neumann_entropy(outcome.reduced_E_after);
  const double entropy_total = (report.final_system_entropy - report.initial_system_entropy) +
                               (s_e_after - s_e_before);
  report.entropy_sum =
      BoundCheckResult::evaluate("system-plus-bath-entropy", 0.0, entropy_total, kCheckBaseTol);

  report.bath_energy_change = expectation(outcome.reduced_E_after.matrix(), bath_H) -
                              expectation(equilibrium.matrix(), bath_H);
  report.bath_energy_change_bits = beta * report.bath_energy_change / std::numbers::ln2;
  report.energy_erasure = BoundCheckResult::evaluate(
      "erased-bits-vs-bath-energy", report.erased_bits, report.bath_energy_change_bits,
      kCheckBaseTol);

  if (system_H.has_value()) {
    const double system_energy_change =
        expectation(outcome.reduced_AB_after.matrix(), *system_H) -
        expectation(state_B.matrix(), *system_H);
    report.energy_conservation_residual = system_energy_change + report.bath_energy_change;
  }
  return report;
}

}  // namespace qerase
