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

#include <string>
#include <vector>

#include "qerase/qmath.hpp"
#include "qerase/state.hpp"
#include "qerase/types.hpp"

namespace qerase {

/// Trace-preserving completely positive map as a Kraus family.
/// Construction validates completeness sum K^dag K = I within 1e-10.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  int size() const { return static_cast<int>(ops_.size()); }

  static KrausChannel identity(int dim);
  static KrausChannel fully_depolarizing(int dim);

 private:
  std::vector<ComplexMatrix> ops_;
  int dim_in_ = 0;
  int dim_out_ = 0;
};

/// Unitary environment model of a channel on `acts_on`: U on
/// H_side (x) H_env (side = slow index) with an explicit initial
/// environment state.
struct UnitaryDilation {
  ComplexMatrix unitary;
  int env_dim = 0;
  DensityOperator env_state;
  std::string acts_on;

  /// U^dag U = I check; empty string when valid.
  std::string invariant_violation(double atol = 1e-10) const;
};

/// Before/after record of one system-environment interaction. The after
/// state is exactly (I (x) U) before (I (x) U)^dag; global entropy is
/// conserved within 1e-9 (checked at construction).
struct ProcessOutcome {
  DensityOperator state_before;     // on system + env
  DensityOperator state_after;      // on system + env
  DensityOperator reduced_AB_after; // system marginal
  DensityOperator reduced_E_after;  // environment marginal
  std::string env_label;
};

/// sum K rho K^dag over the whole state.
DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& state);

/// Channel applied to one tensor factor; every other marginal unchanged.
DensityOperator apply_local_channel(const KrausChannel& ch, const DensityOperator& state,
                                    const std::string& side);

/// Stinespring dilation with env dimension max(#Kraus, min_env_dim) and
/// environment initialized in |0><0|. Columns not fixed by the isometry
/// are completed by deterministic Gram-Schmidt over the standard basis.
/// Square channels only.
UnitaryDilation stinespring_dilation(const KrausChannel& ch, const std::string& acts_on = "B",
                                     int min_env_dim = 0);

/// Induced channel of a dilation applied to a raw operator on the acted
/// side: Tr_env[U (x (x) rho_env) U^dag]. Accepts non-Hermitian inputs
/// (linear extension) for operator-basis comparisons.
ComplexMatrix dilation_induced_apply(const UnitaryDilation& dilation, const ComplexMatrix& x);

/// max entrywise difference between the dilation's induced channel and
/// `ch` over the complete matrix-unit basis.
double channel_difference_on_operator_basis(const KrausChannel& ch,
                                            const UnitaryDilation& dilation);

/// Attaches the dilation's environment to `state_AB`, applies
/// I (x) U, and returns full before/after states plus marginals.
ProcessOutcome run_process(const DensityOperator& state_AB, const UnitaryDilation& dilation);

/// exp(-beta H)/Z via eigendecomposition. beta >= 0.
DensityOperator thermal_state(const ComplexMatrix& hamiltonian, double beta,
                              const SubsystemDims& dims);
DensityOperator thermal_state(const ComplexMatrix& hamiltonian, double beta,
                              const std::string& label = "B");

/// Kraus family {F_ln = sqrt(w_l) |l><psi_n|} mapping every input to the
/// Gibbs state of `hamiltonian` at inverse temperature `beta`; |l> are the
/// Hamiltonian eigenvectors and {|psi_n>} the columns of `input_basis`.
KrausChannel thermalizing_channel(const ComplexMatrix& hamiltonian, double beta,
                                  const ComplexMatrix& input_basis);

/// Dilation of the thermalizing channel; environment dimension d^2,
/// indexed by the Kraus pair (l, n).
UnitaryDilation thermalizing_dilation(const ComplexMatrix& hamiltonian, double beta,
                                      const ComplexMatrix& input_basis,
                                      const std::string& acts_on = "B");

/// Hiding-map dilation: |b_j>|0>_E -> sum_k sqrt(p_k) |k>_B (x)
/// (|b_j> (x) |q_k>)_E. The induced channel maps every input to the fixed
/// state sum_k p_k |k><k|; the input survives in the environment's
/// j-register. Environment layout: (j-register of dim_B) (x) (k-register
/// spanned by the columns of env_basis), zero-padded.
UnitaryDilation bleaching_dilation(const std::vector<double>& hiding_distribution,
                                   const ComplexMatrix& env_basis, int dim_B,
                                   const std::string& acts_on = "B");

/// Same with the computational k-register basis.
UnitaryDilation bleaching_dilation(const std::vector<double>& hiding_distribution, int dim_B,
                                   const std::string& acts_on = "B");

/// Kraus family {|i><i|} for the columns of `basis`; local application
/// produces a quantum-classical state on the measured side.
KrausChannel dephasing_measurement_channel(const ComplexMatrix& basis);

/// SWAP between the acted side and an equal-dimensional environment in
/// `env_state` (used by erasure-to-bath models).
UnitaryDilation swap_dilation(const DensityOperator& env_state, const std::string& acts_on = "B");

}  // namespace qerase
