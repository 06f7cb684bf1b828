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

#include "qerase/correlations.hpp"

#include <stdexcept>

#include "qerase/qmath.hpp"

namespace qerase {

namespace {

std::vector<std::string> labels_without(const SubsystemDims& dims, const std::string& side) {
  std::vector<std::string> rest;
  for (const auto& label : dims.labels()) {
    if (label != side) rest.push_back(label);
  }
  return rest;
}

}  // namespace

double quantum_mutual_information(
    const DensityOperator& state,
    const std::pair<std::vector<std::string>, std::vector<std::string>>& cut) {
  const auto& [x, y] = cut;
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("quantum_mutual_information: cut sides must be non-empty");
  }
  if (x.size() + y.size() != static_cast<std::size_t>(state.dims().count())) {
    throw std::invalid_argument("quantum_mutual_information: cut must partition the subsystems");
  }
  for (const auto& label : x) {
    for (const auto& other : y) {
      if (label == other) {
        throw std::invalid_argument("quantum_mutual_information: cut sides overlap on '" +
                                    label + "'");
      }
    }
  }
  const double s_x = von_neumann_entropy(partial_trace(state, x));
  const double s_y = von_neumann_entropy(partial_trace(state, y));
  return s_x + s_y - von_neumann_entropy(state);
}

double conditional_entropy(const DensityOperator& state, const std::string& given) {
  const DensityOperator marginal = partial_trace(state, {given});
  return von_neumann_entropy(state) - von_neumann_entropy(marginal);
}

double classical_correlation(const DensityOperator& state, const std::string& side,
                             const OptimizerConfig& cfg) {
  const std::vector<std::string> rest = labels_without(state.dims(), side);
  const double s_rest = von_neumann_entropy(partial_trace(state, rest));
  return s_rest - measured_conditional_entropy(state, side, cfg).value;
}

CorrelationReport discord(const DensityOperator& state, const std::string& side,
                          const OptimizerConfig& cfg) {
  const std::vector<std::string> rest = labels_without(state.dims(), side);
  if (rest.empty()) {
    throw std::invalid_argument("discord: state has a single subsystem");
  }

  const double s_rest = von_neumann_entropy(partial_trace(state, rest));
  const double s_side = von_neumann_entropy(partial_trace(state, {side}));
  const double s_full = von_neumann_entropy(state);
  const MeasuredConditionalEntropy minimum = measured_conditional_entropy(state, side, cfg);

  CorrelationReport report;
  report.mutual_information = s_rest + s_side - s_full;
  report.measured_conditional_entropy = minimum.value;
  report.classical_correlation = s_rest - minimum.value;
  report.discord = report.mutual_information - report.classical_correlation;
  report.conditional_entropy = s_full - s_side;
  report.optimal_measurement = minimum.measurement;
  report.measured_side = side;
  report.optimizer_slack = cfg.slack();
  return report;
}

std::pair<double, double> discord_asymmetric_check(const DensityOperator& state,
                                                   const OptimizerConfig& cfg) {
  if (state.dims().count() != 2) {
    throw std::invalid_argument("discord_asymmetric_check: state must be bipartite");
  }
  const std::string first = state.dims().labels()[0];
  const std::string second = state.dims().labels()[1];
  return {discord(state, second, cfg).discord, discord(state, first, cfg).discord};
}

}  // namespace qerase
