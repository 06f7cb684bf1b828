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

#include <Eigen/Dense>
#include <complex>

namespace qerase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default absolute tolerance for state validation (Hermiticity, trace, PSD).
inline constexpr double kDefaultTol = 1e-9;

/// Eigenvalues with |x| <= this are treated as exactly zero by the entropy.
inline constexpr double kEntropyClamp = 1e-12;

/// Measurement branches with probability below this are excluded from
/// conditional averages (the 0*log 0 := 0 convention).
inline constexpr double kBranchCutoff = 1e-12;

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise comparison with an explicit absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double atol);

bool is_hermitian(const ComplexMatrix& m, double atol);

}  // namespace qerase
