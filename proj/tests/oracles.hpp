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

// Reference implementations used to cross-check the library. Everything
// here is written from the defining formulas with plain Eigen calls and
// explicit index loops, on purpose: these functions share no code with
// the implementations they certify.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qtest {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// -sum p log2 p with the 0 log 0 := 0 convention.
double shannon_bits(const std::vector<double>& p);

/// Entropy in bits of a Hermitian PSD matrix via its eigenvalues.
double entropy_bits(const Mat& rho);

/// Kronecker product from the quadruple loop.
Mat naive_kron(const Mat& a, const Mat& b);

/// Partial trace of a (dim_a * dim_b) square matrix over the second
/// (keep_first) or first factor, with explicit double indices.
Mat naive_ptrace(const Mat& m, int dim_a, int dim_b, bool keep_first);

/// Minimum over a theta/phi grid of the average post-measurement entropy
/// when one qubit of a two-qubit state is measured with rank-1
/// projectors. `measure_fast` selects the fast (second) factor. A pure
/// grid scan: the result is an upper bound on the true minimum that
/// tightens as `grid` grows.
double brute_force_min_avg_entropy(const Mat& rho4, bool measure_fast, int grid);

/// Mutual information across the 2x2 bipartition from raw entropies.
double mutual_information_2qubit(const Mat& rho4);

}  // namespace qtest
