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

#include "qerase/dims.hpp"
#include "qerase/types.hpp"

namespace qerase {

/// Density operator: Hermitian, unit-trace, positive semidefinite matrix
/// carrying a subsystem-dimension signature. Construction validates all
/// three invariants within `tol` and throws std::invalid_argument on
/// violation. Immutable after construction.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, SubsystemDims dims, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemDims& dims() const { return dims_; }
  double tol() const { return tol_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  /// Re-runs the construction-time invariant checks (Hermitian, unit
  /// trace, PSD). Returns an empty string when valid, else a diagnostic.
  std::string invariant_violation() const;

 private:
  ComplexMatrix matrix_;
  SubsystemDims dims_;
  double tol_;
};

/// Unit-norm state vector with a subsystem signature.
class PureStateVector {
 public:
  PureStateVector(ComplexVector amplitudes, SubsystemDims dims, double tol = kDefaultTol);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const SubsystemDims& dims() const { return dims_; }

  DensityOperator to_density() const;

 private:
  ComplexVector amplitudes_;
  SubsystemDims dims_;
  double tol_;
};

}  // namespace qerase
