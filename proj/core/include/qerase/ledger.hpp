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

#include <optional>
#include <string>

#include "qerase/channels.hpp"
#include "qerase/correlations.hpp"

namespace qerase {

/// Base additive tolerance on every inequality check, on top of the
/// optimizer slack budget.
inline constexpr double kCheckBaseTol = 1e-9;

/// Thermodynamic bookkeeping of one process: entropies before/after for
/// the system and the environment, correlation quantities for one
/// measured side, and the optimizer slack those carry. All in bits.
struct EntropyLedger {
  double S_AB_before = 0.0, S_AB_after = 0.0;
  double S_E_before = 0.0, S_E_after = 0.0;
  double delta_S_T = 0.0;  // (S_AB' + S_E') - (S_AB + S_E)
  double D_before = 0.0, D_after = 0.0, delta_D = 0.0;  // delta_D = D - D'
  double J_before = 0.0, J_after = 0.0;
  double I_before = 0.0, I_after = 0.0;
  double S_B_before = 0.0, S_B_after = 0.0;
  double conditional_S_B_given_A = 0.0;  // S(B|A) of the initial state, signed
  double optimizer_slack = 0.0;
  std::string measured_side;

  /// Tolerance budget for inequality checks: the discord delta subtracts
  /// two numerically minimized quantities, so both slacks are budgeted.
  double check_tolerance() const { return 2.0 * optimizer_slack + kCheckBaseTol; }
};

/// One evaluated inequality lhs <= rhs + tolerance.
struct BoundCheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool satisfied = false;
  double margin = 0.0;  // rhs - lhs

  static BoundCheckResult evaluate(std::string name, double lhs, double rhs, double tolerance);
};

struct PhysicalConstants {
  double boltzmann_k = 1.380649e-23;  // J/K
  double temperature_T = 300.0;       // K

  void validate() const;  // both strictly positive
};

/// Populates every ledger field from a process outcome; discord before
/// and after are computed with the same OptimizerConfig and the slack is
/// recorded.
EntropyLedger build_ledger(const ProcessOutcome& outcome, const std::string& side,
                           const OptimizerConfig& cfg);

/// delta_D <= delta_S_T (the erased quantum correlation never exceeds the
/// total entropy change).
BoundCheckResult check_erasure_bound(const EntropyLedger& ledger);

struct ErasureWork {
  double W = 0.0;      // k T ln2 * delta_S_T, Joules
  double W_min = 0.0;  // k T ln2 * delta_D, Joules
};

/// Entropy cost of the process in energy units. W >= W_min up to the
/// ledger tolerance. Entropies are in bits, hence the ln 2 factor.
ErasureWork erasure_work(const EntropyLedger& ledger, const PhysicalConstants& consts);

/// D_after >= -delta_S_T for processes starting from a zero-discord
/// state: created quantum correlation is at least the total negentropy.
/// Throws std::invalid_argument when D_before exceeds the slack budget.
BoundCheckResult check_creation_bound(const EntropyLedger& ledger);

/// delta_S_B + delta_S_E >= delta_D + S(B|A) - S(rho_B): erasure cost in
/// the presence of a quantum memory A (S(B|A) may be negative).
BoundCheckResult check_generalized_landauer(const EntropyLedger& ledger);

/// The three relations behind the total-correlation compensation
/// observation. `compensation` is the headline bound; the other two are
/// identities/monotonicities that certify the arithmetic.
struct MutualInfoCompensation {
  BoundCheckResult nonincreasing;   // 0 <= delta I_(A|B)
  BoundCheckResult compensation;    // delta I_(A|B) <= I(rho_SE')
  BoundCheckResult total_identity;  // |I(rho_SE') - delta_S_T| ~ 0
};

MutualInfoCompensation check_mutual_info_compensation(const ProcessOutcome& outcome);

/// Erasure-toward-a-bath record. `entropy_sum` asserts
/// delta_S_B + delta_S_E >= 0; `energy_erasure` asserts that the erased
/// bits never exceed beta * delta_E / ln 2 (the bath energy draw in bits).
/// Energy bookkeeping delta_E_B + delta_E_E = 0 is evaluated only when a
/// system Hamiltonian is supplied.
struct LandauerReport {
  BoundCheckResult entropy_sum;
  BoundCheckResult energy_erasure;
  double bath_energy_change = 0.0;       // Tr[rho_E' H_E] - Tr[rho_E H_E]
  double bath_energy_change_bits = 0.0;  // beta * delta_E / ln 2
  double erased_bits = 0.0;              // S(rho_B) - S(rho_B')
  double initial_system_entropy = 0.0;
  double final_system_entropy = 0.0;
  std::optional<double> energy_conservation_residual;  // delta_E_B + delta_E_E
};

/// Runs the dilation on `state_B` alone and checks the uncorrelated
/// erasure relations. The dilation's environment must be
/// thermal_state(bath_H, beta) within 1e-9.
LandauerReport check_landauer_uncorrelated(const DensityOperator& state_B,
                                           const ComplexMatrix& bath_H, double beta,
                                           const UnitaryDilation& dilation,
                                           const std::optional<ComplexMatrix>& system_H =
                                               std::nullopt);

}  // namespace qerase
