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

#include "qerase/measurement.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qerase {

ProjectiveMeasurement ProjectiveMeasurement::from_basis(const std::string& side,
                                                        const ComplexMatrix& basis) {
  if (basis.rows() != basis.cols()) {
    throw std::invalid_argument("ProjectiveMeasurement: basis must be square");
  }
  const ComplexMatrix gram = basis.adjoint() * basis;
  if (max_abs_diff(gram, ComplexMatrix::Identity(basis.rows(), basis.cols())) > 1e-10) {
    throw std::invalid_argument("ProjectiveMeasurement: basis columns are not orthonormal");
  }
  ProjectiveMeasurement m;
  m.side = side;
  m.dim = static_cast<int>(basis.rows());
  m.projectors.reserve(m.dim);
  for (int i = 0; i < m.dim; ++i) {
    m.projectors.push_back(basis.col(i) * basis.col(i).adjoint());
  }
  return m;
}

std::string ProjectiveMeasurement::invariant_violation(double atol) const {
  if (dim < 1) return "dimension not set";
  if (static_cast<int>(projectors.size()) != dim) {
    return "projector count does not match dimension";
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const ComplexMatrix& p = projectors[i];
    if (p.rows() != dim || p.cols() != dim) return "projector shape mismatch";
    if (!is_hermitian(p, atol)) return "projector is not Hermitian";
    if (max_abs_diff(p * p, p) > atol) return "projector is not idempotent";
    if (std::abs(p.trace().real() - 1.0) > atol) return "projector is not rank-1";
    for (int j = 0; j < i; ++j) {
      if ((p * projectors[j]).cwiseAbs().maxCoeff() > atol) {
        return "projectors are not mutually orthogonal";
      }
    }
    sum += p;
  }
  if (max_abs_diff(sum, ComplexMatrix::Identity(dim, dim)) > atol) {
    return "projectors do not sum to identity";
  }
  return std::string();
}

std::vector<MeasurementBranch> measure_branches(const DensityOperator& state,
                                                const ProjectiveMeasurement& m) {
  const SubsystemDims& dims = state.dims();
  if (!dims.has(m.side)) {
    throw std::invalid_argument("measure_branches: state has no subsystem '" + m.side + "'");
  }
  if (dims.dim_of(m.side) != m.dim) {
    throw std::invalid_argument("measure_branches: measurement dimension mismatch");
  }
  if (dims.count() < 2) {
    throw std::invalid_argument("measure_branches: nothing left after tracing the measured side");
  }

  std::vector<std::string> rest;
  for (const auto& label : dims.labels()) {
    if (label != m.side) rest.push_back(label);
  }
  const SubsystemDims rest_dims = dims.subset(rest);
  const ComplexMatrix mixed =
      ComplexMatrix::Identity(rest_dims.total_dim(), rest_dims.total_dim()) /
      static_cast<double>(rest_dims.total_dim());

  std::vector<MeasurementBranch> branches;
  branches.reserve(m.projectors.size());
  for (const ComplexMatrix& p : m.projectors) {
    const ComplexMatrix lifted = embed_one_site(p, dims, m.side);
    ComplexMatrix post = lifted * state.matrix() * lifted;
    const double prob = post.trace().real();
    MeasurementBranch branch{
        prob,
        DensityOperator(mixed, rest_dims, state.tol()),
        true,
    };
    if (prob >= kBranchCutoff) {
      post /= prob;
      // The measured side is now pure in the projector direction; trace it
      // out to get the conditional state of the rest.
      DensityOperator joint(std::move(post), dims, state.tol());
      branch.conditional_state = partial_trace(joint, rest);
      branch.negligible = false;
    }
    branches.push_back(std::move(branch));
  }
  return branches;
}

}  // namespace qerase
