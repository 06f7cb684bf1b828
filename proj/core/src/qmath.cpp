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

#include "qerase/qmath.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace qerase {

namespace {

// Maps each position of `sub` to its position in `full`.
std::vector<int> positions_in(const SubsystemDims& full, const std::vector<std::string>& sub) {
  std::vector<int> pos;
  pos.reserve(sub.size());
  for (const auto& label : sub) {
    pos.push_back(full.position_of(label));
  }
  return pos;
}

}  // namespace

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  for (const auto& label : b.dims().labels()) {
    if (a.dims().has(label)) {
      throw std::invalid_argument("tensor: duplicate subsystem label '" + label + "'");
    }
  }
  std::vector<int> d = a.dims().dims();
  std::vector<std::string> l = a.dims().labels();
  d.insert(d.end(), b.dims().dims().begin(), b.dims().dims().end());
  l.insert(l.end(), b.dims().labels().begin(), b.dims().labels().end());
  return DensityOperator(tensor_product(a.matrix(), b.matrix()),
                         SubsystemDims(std::move(d), std::move(l)),
                         std::max(a.tol(), b.tol()));
}

DensityOperator partial_trace(const DensityOperator& state, const std::vector<std::string>& keep) {
  const SubsystemDims& dims = state.dims();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: must keep at least one subsystem");
  }
  const SubsystemDims kept = dims.subset(keep);
  if (kept.count() == dims.count()) {
    throw std::invalid_argument("partial_trace: nothing to trace out");
  }

  std::vector<bool> keep_mask(dims.count(), false);
  for (const auto& label : kept.labels()) {
    keep_mask[dims.position_of(label)] = true;
  }
  std::vector<int> kept_pos, traced_pos;
  for (int i = 0; i < dims.count(); ++i) {
    (keep_mask[i] ? kept_pos : traced_pos).push_back(i);
  }

  const long dim_keep = kept.total_dim();
  long dim_trace = 1;
  for (int p : traced_pos) dim_trace *= dims.dim_at(p);

  // Strides of each subsystem in the flat index (leftmost slowest).
  std::vector<long> stride(dims.count());
  long acc = 1;
  for (int i = dims.count() - 1; i >= 0; --i) {
    stride[i] = acc;
    acc *= dims.dim_at(i);
  }

  // Flat offsets of every kept and traced configuration.
  const auto offsets = [&](const std::vector<int>& pos, long count) {
    std::vector<long> out(count, 0);
    for (long flat = 0; flat < count; ++flat) {
      long rem = flat;
      for (int i = static_cast<int>(pos.size()) - 1; i >= 0; --i) {
        const int d = dims.dim_at(pos[i]);
        out[flat] += (rem % d) * stride[pos[i]];
        rem /= d;
      }
    }
    return out;
  };
  const std::vector<long> keep_off = offsets(kept_pos, dim_keep);
  const std::vector<long> trace_off = offsets(traced_pos, dim_trace);

  const ComplexMatrix& rho = state.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (long r = 0; r < dim_keep; ++r) {
    for (long c = 0; c < dim_keep; ++c) {
      Complex sum = 0.0;
      for (long t = 0; t < dim_trace; ++t) {
        sum += rho(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      }
      out(r, c) = sum;
    }
  }
  return DensityOperator(std::move(out), kept, state.tol());
}

DensityOperator reorder_subsystems(const DensityOperator& state,
                                   const std::vector<std::string>& new_order) {
  const SubsystemDims& dims = state.dims();
  if (static_cast<int>(new_order.size()) != dims.count()) {
    throw std::invalid_argument("reorder_subsystems: order must list every subsystem");
  }
  const std::vector<int> src_pos = positions_in(dims, new_order);
  {
    std::vector<int> check = src_pos;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < dims.count(); ++i) {
      if (check[i] != i) {
        throw std::invalid_argument("reorder_subsystems: order is not a permutation");
      }
    }
  }

  std::vector<int> new_dims(dims.count());
  for (int i = 0; i < dims.count(); ++i) new_dims[i] = dims.dim_at(src_pos[i]);
  SubsystemDims out_dims(new_dims, new_order);

  const long n = dims.total_dim();
  std::vector<long> perm(n);
  for (long flat = 0; flat < n; ++flat) {
    const std::vector<int> multi = out_dims.unpack(flat);
    std::vector<int> src_multi(dims.count());
    for (int i = 0; i < dims.count(); ++i) src_multi[src_pos[i]] = multi[i];
    perm[flat] = dims.pack(src_multi);
  }

  const ComplexMatrix& rho = state.matrix();
  ComplexMatrix out(n, n);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      out(r, c) = rho(perm[r], perm[c]);
    }
  }
  return DensityOperator(std::move(out), std::move(out_dims), state.tol());
}

ComplexMatrix embed_one_site(const ComplexMatrix& op, const SubsystemDims& dims,
                             const std::string& site) {
  const int pos = dims.position_of(site);
  if (op.rows() != dims.dim_at(pos) || op.cols() != dims.dim_at(pos)) {
    throw std::invalid_argument("embed_one_site: operator does not match site dimension");
  }
  long left = 1, right = 1;
  for (int i = 0; i < pos; ++i) left *= dims.dim_at(i);
  for (int i = pos + 1; i < dims.count(); ++i) right *= dims.dim_at(i);
  ComplexMatrix result = ComplexMatrix::Identity(left, left);
  result = tensor_product(result, op);
  if (right > 1) {
    result = tensor_product(result, ComplexMatrix::Identity(right, right));
  }
  return result;
}

ComplexMatrix embed_two_site(const ComplexMatrix& op, const SubsystemDims& dims,
                             const std::string& site_slow, const std::string& site_fast) {
  const int p_slow = dims.position_of(site_slow);
  const int p_fast = dims.position_of(site_fast);
  if (p_slow == p_fast) {
    throw std::invalid_argument("embed_two_site: sites must differ");
  }
  const long d_slow = dims.dim_at(p_slow);
  const long d_fast = dims.dim_at(p_fast);
  if (op.rows() != d_slow * d_fast || op.cols() != d_slow * d_fast) {
    throw std::invalid_argument("embed_two_site: operator does not match joint dimension");
  }

  const long n = dims.total_dim();
  ComplexMatrix result = ComplexMatrix::Zero(n, n);
  // Row/column pairs agree on every other subsystem; the two acted sites
  // pick the operator entry op(i_slow*d_fast + i_fast, j_slow*d_fast + j_fast).
  for (long r = 0; r < n; ++r) {
    const std::vector<int> rm = dims.unpack(r);
    for (long c = 0; c < n; ++c) {
      const std::vector<int> cm = dims.unpack(c);
      bool same_elsewhere = true;
      for (int i = 0; i < dims.count(); ++i) {
        if (i == p_slow || i == p_fast) continue;
        if (rm[i] != cm[i]) {
          same_elsewhere = false;
          break;
        }
      }
      if (!same_elsewhere) continue;
      const long op_r = rm[p_slow] * d_fast + rm[p_fast];
      const long op_c = cm[p_slow] * d_fast + cm[p_fast];
      result(r, c) = op(op_r, op_c);
    }
  }
  return result;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
  }
  const int n = static_cast<int>(m.rows());
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double h = 0.0;
  for (long i = 0; i < eigenvalues.size(); ++i) {
    const double x = eigenvalues(i);
    if (x < -1e-9) {
      std::ostringstream os;
      os << "entropy_of_spectrum: negative weight " << x;
      throw std::domain_error(os.str());
    }
    if (x <= kEntropyClamp) continue;
    h -= x * std::log2(x);
  }
  return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("von_neumann_entropy: eigensolver failed to converge");
  }
  return entropy_of_spectrum(solver.eigenvalues());
}

double von_neumann_entropy(const DensityOperator& state) {
  return von_neumann_entropy(state.matrix());
}

PureStateVector purify(const DensityOperator& state, const std::string& ancilla_label) {
  if (state.dims().has(ancilla_label)) {
    throw std::invalid_argument("purify: ancilla label '" + ancilla_label +
                                "' already present");
  }
  const EigenDecomposition eig = hermitian_eigen(state.matrix(), state.tol());
  const long d = state.dim();
  ComplexVector amps = ComplexVector::Zero(d * d);
  // |psi> = sum_k sqrt(lambda_k) |v_k> (x) |k>; ancilla = fast index.
  for (long k = 0; k < d; ++k) {
    const double lambda = std::max(eig.eigenvalues(k), 0.0);
    if (lambda <= 0.0) continue;
    const double root = std::sqrt(lambda);
    for (long i = 0; i < d; ++i) {
      amps(i * d + k) = root * eig.eigenvectors(i, k);
    }
  }
  amps /= amps.norm();
  return PureStateVector(std::move(amps),
                         state.dims().appended(ancilla_label, static_cast<int>(d)),
                         state.tol());
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (!(a.dims() == b.dims())) {
    throw std::invalid_argument("trace_distance: subsystem signatures differ");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix() - b.matrix(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("trace_distance: eigensolver failed to converge");
  }
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qerase
