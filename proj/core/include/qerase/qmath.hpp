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

#include "qerase/state.hpp"
#include "qerase/types.hpp"

namespace qerase {

/// Kronecker product, leftmost factor = slowest index.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Product state a (x) b with concatenated signatures. Labels must not clash.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Reduced state over the subsystems named in `keep` (original order is
/// preserved). `keep` must be a non-empty proper subset of the labels.
DensityOperator partial_trace(const DensityOperator& state, const std::vector<std::string>& keep);

/// Same state with its subsystems permuted into `new_order`.
DensityOperator reorder_subsystems(const DensityOperator& state,
                                   const std::vector<std::string>& new_order);

/// Lifts an operator acting on one subsystem to the full space
/// (identity on every other factor).
ComplexMatrix embed_one_site(const ComplexMatrix& op, const SubsystemDims& dims,
                             const std::string& site);

/// Lifts an operator acting on two subsystems (slow index = `site_slow`,
/// fast index = `site_fast`) to the full space. The two sites need not be
/// adjacent.
ComplexMatrix embed_two_site(const ComplexMatrix& op, const SubsystemDims& dims,
                             const std::string& site_slow, const std::string& site_fast);

struct EigenDecomposition {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // columns, matching order
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws std::invalid_argument if `m` is not Hermitian within `tol`.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol = kDefaultTol);

/// Entropy in bits of a probability-like spectrum. Values in
/// [-kEntropyClamp, kEntropyClamp] contribute zero; values below -1e-9
/// throw std::domain_error.
double entropy_of_spectrum(const RealVector& eigenvalues);

/// Von Neumann entropy in bits, -sum lambda log2 lambda.
double von_neumann_entropy(const DensityOperator& state);

/// Entropy in bits of a raw Hermitian unit-trace matrix (no signature).
double von_neumann_entropy(const ComplexMatrix& rho);

/// Purification with a single ancilla subsystem of the full input
/// dimension (unused Schmidt directions padded with zeros). Tracing the
/// ancilla out of the result reproduces the input.
PureStateVector purify(const DensityOperator& state, const std::string& ancilla_label);

/// (1/2) sum |eigenvalues of a - b|. Requires identical signatures.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace qerase
