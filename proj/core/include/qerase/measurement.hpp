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

/// Rank-1 orthonormal projective measurement on one subsystem.
struct ProjectiveMeasurement {
  std::string side;
  int dim = 0;
  std::vector<ComplexMatrix> projectors;

  /// Builds projectors |v_i><v_i| from the columns of `basis`.
  /// Throws std::invalid_argument unless the columns are orthonormal.
  static ProjectiveMeasurement from_basis(const std::string& side, const ComplexMatrix& basis);

  /// Completeness, orthogonality, Hermiticity and rank-1 checks.
  /// Empty string when valid, else a diagnostic.
  std::string invariant_violation(double atol = 1e-10) const;
};

/// One measurement outcome: probability and the post-measurement state of
/// the unmeasured subsystems. Outcomes with probability < kBranchCutoff
/// carry a flagged maximally-mixed placeholder and contribute zero to
/// conditional averages.
struct MeasurementBranch {
  double probability = 0.0;
  DensityOperator conditional_state;
  bool negligible = false;
};

/// Applies a projective measurement on `m.side`: probabilities
/// p_i = Tr[(I (x) P_i) rho (I (x) P_i)] and conditional states
/// rho_{rest|i} = Tr_side[(I (x) P_i) rho (I (x) P_i)] / p_i.
std::vector<MeasurementBranch> measure_branches(const DensityOperator& state,
                                                const ProjectiveMeasurement& m);

}  // namespace qerase
