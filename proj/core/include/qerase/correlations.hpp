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
#include <utility>
#include <vector>

#include "qerase/optimizer.hpp"
#include "qerase/state.hpp"

namespace qerase {

/// Correlation content of one bipartite state for one measured side.
/// All entropic quantities in bits. The minimization runs over rank-1
/// projective measurements only; `measurement_class` records that.
struct CorrelationReport {
  double mutual_information = 0.0;            // I = S_A + S_B - S_AB
  double classical_correlation = 0.0;         // J = S_rest - min_meas avg entropy
  double discord = 0.0;                       // D = I - J (definitional)
  double conditional_entropy = 0.0;           // S(rest|side), signed
  double measured_conditional_entropy = 0.0;  // the achieved minimum
  ProjectiveMeasurement optimal_measurement;
  std::string measured_side;
  double optimizer_slack = 0.0;
  std::string measurement_class = "rank1-projective";
};

/// S(rho_X) + S(rho_Y) - S(rho) across the cut (X, Y), which must
/// partition the state's labels.
double quantum_mutual_information(const DensityOperator& state,
                                  const std::pair<std::vector<std::string>,
                                                  std::vector<std::string>>& cut);

/// S(rest|given) = S(rho) - S(rho_given). Negative for entangled states.
double conditional_entropy(const DensityOperator& state, const std::string& given);

/// J_side = S(rho_rest) - min over measurements of sum p_i S(rho_{rest|i}).
double classical_correlation(const DensityOperator& state, const std::string& side,
                             const OptimizerConfig& cfg);

/// Full correlation report for a bipartite state: I, J, D = I - J and the
/// argmin measurement on `side`.
CorrelationReport discord(const DensityOperator& state, const std::string& side,
                          const OptimizerConfig& cfg);

/// Discord with respect to measuring the second label, then the first:
/// returns (D_second, D_first). The two are generally unequal.
std::pair<double, double> discord_asymmetric_check(const DensityOperator& state,
                                                   const OptimizerConfig& cfg);

}  // namespace qerase
