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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qerase/measurement.hpp"
#include "qerase/state.hpp"

namespace qerase {

/// Settings for the measurement minimizer. The minimizer is a coarse
/// parameter scan followed by Nelder-Mead refinement from the best scan
/// point plus `random_restarts` seeded extra starts.
struct OptimizerConfig {
  int grid_resolution = 64;
  int refinement_iterations = 400;
  int random_restarts = 8;
  std::uint64_t seed = 1;
  double convergence_tol = 1e-7;  // bits

  /// Throws std::invalid_argument when outside the supported ranges
  /// (grid_resolution >= 8, convergence_tol > 0, non-negative counts).
  void validate() const;

  /// Documented gap budget between the numerical minimum and the true
  /// infimum. The optimizer returns an upper bound on the measured
  /// conditional entropy, so downstream inequality checks budget this.
  double slack() const { return 2.0 * convergence_tol; }
};

/// Number of real angles parametrizing a rank-1 projective basis on C^d:
/// 2 for d=2 (Bloch angles), d(d-1) for d=3,4 (Givens rotations with phases).
int measurement_parameter_count(int dim);

/// Orthonormal basis (matrix columns) from an angle vector.
/// d=2: theta in [0,pi], phi in [0,2pi). d=3,4: a product of Givens
/// rotations with phases applied to the computational basis. All angles
/// are periodic, so any real values are accepted.
ComplexMatrix measurement_basis_from_angles(int dim, std::span<const double> angles);

struct SimplexResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int iterations = 0;
};

/// Derivative-free Nelder-Mead minimization. Stops when the simplex
/// value spread falls below `ftol` or after `max_iterations`. The
/// returned value is f evaluated exactly at the returned point.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> start, double initial_step,
                          int max_iterations, double ftol);

struct MeasuredConditionalEntropy {
  double value = 0.0;  // bits
  ProjectiveMeasurement measurement;
};

/// min over rank-1 projective measurements on `side` of
/// sum_i p_i S(rho_{rest|i}), together with the argmin measurement.
/// Supported measured dimensions: 2, 3, 4 (throws UnsupportedDimension
/// otherwise). Deterministic for fixed (state, side, cfg).
MeasuredConditionalEntropy measured_conditional_entropy(const DensityOperator& state,
                                                        const std::string& side,
                                                        const OptimizerConfig& cfg);

}  // namespace qerase
