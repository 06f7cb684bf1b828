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

#include "qerase/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qerase {

namespace {

std::string density_violation(const ComplexMatrix& m, const SubsystemDims& dims, double tol) {
  if (m.rows() != m.cols()) {
    return "matrix is not square";
  }
  if (m.rows() != dims.total_dim()) {
    std::ostringstream os;
    os << "matrix dimension " << m.rows() << " does not match signature dimension "
       << dims.total_dim();
    return os.str();
  }
  const double herm = max_abs_diff(m, m.adjoint());
  if (herm > tol) {
    std::ostringstream os;
    os << "not Hermitian: max |rho - rho^dag| = " << herm;
    return os.str();
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    std::ostringstream os;
    os << "trace is " << tr.real();
    if (std::abs(tr.imag()) > tol) os << " + " << tr.imag() << "i";
    os << ", expected 1";
    return os.str();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    return "eigenvalue computation failed";
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    std::ostringstream os;
    os << "not positive semidefinite: smallest eigenvalue = " << min_eig;
    return os.str();
  }
  return std::string();
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix, SubsystemDims dims, double tol)
    : matrix_(std::move(matrix)), dims_(std::move(dims)), tol_(tol) {
  if (tol_ <= 0.0) {
    throw std::invalid_argument("DensityOperator: tolerance must be positive");
  }
  const std::string why = density_violation(matrix_, dims_, tol_);
  if (!why.empty()) {
    throw std::invalid_argument("DensityOperator: " + why);
  }
}

std::string DensityOperator::invariant_violation() const {
  return density_violation(matrix_, dims_, tol_);
}

PureStateVector::PureStateVector(ComplexVector amplitudes, SubsystemDims dims, double tol)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)), tol_(tol) {
  if (tol_ <= 0.0) {
    throw std::invalid_argument("PureStateVector: tolerance must be positive");
  }
  if (amplitudes_.size() != dims_.total_dim()) {
    throw std::invalid_argument("PureStateVector: vector length does not match signature");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol_) {
    std::ostringstream os;
    os << "PureStateVector: norm is " << norm << ", expected 1";
    throw std::invalid_argument(os.str());
  }
}

DensityOperator PureStateVector::to_density() const {
  ComplexMatrix rho = amplitudes_ * amplitudes_.adjoint();
  // Renormalize away the norm's rounding so the density tolerance does
  // not tighten the vector tolerance.
  rho /= rho.trace().real();
  return DensityOperator(std::move(rho), dims_, tol_);
}

}  // namespace qerase
