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

#include "qerase/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qerase {

namespace {

constexpr double kChannelTol = 1e-10;

/// Completes a set of orthonormal columns (already placed in `u` at the
/// positions marked true in `fixed`) to a full unitary. Free columns are
/// filled by Gram-Schmidt over the standard basis in index order, which
/// makes the completion deterministic.
void complete_unitary(ComplexMatrix& u, const std::vector<bool>& fixed) {
  const long n = u.rows();
  std::vector<long> fixed_cols, free_cols;
  for (long c = 0; c < n; ++c) {
    (fixed[c] ? fixed_cols : free_cols).push_back(c);
  }
  std::vector<long> done = fixed_cols;
  long basis_cursor = 0;
  for (long c : free_cols) {
    ComplexVector candidate;
    while (true) {
      if (basis_cursor >= n) {
        throw std::runtime_error("complete_unitary: ran out of basis vectors");
      }
      candidate = ComplexVector::Zero(n);
      candidate(basis_cursor++) = 1.0;
      for (long d : done) {
        candidate -= u.col(d).dot(candidate) * u.col(d);
      }
      // Re-orthogonalize once; plain Gram-Schmidt loses orthogonality
      // when the candidate is nearly in the current span.
      for (long d : done) {
        candidate -= u.col(d).dot(candidate) * u.col(d);
      }
      const double norm = candidate.norm();
      if (norm > 1e-8) {
        candidate /= norm;
        break;
      }
    }
    u.col(c) = candidate;
    done.push_back(c);
  }
}

std::string free_env_label(const SubsystemDims& taken) {
  if (!taken.has("E")) return "E";
  for (int i = 1;; ++i) {
    std::ostringstream os;
    os << "E" << i;
    if (!taken.has(os.str())) return os.str();
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops) : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("KrausChannel: at least one operator required");
  }
  dim_out_ = static_cast<int>(ops_.front().rows());
  dim_in_ = static_cast<int>(ops_.front().cols());
  if (dim_in_ < 1 || dim_out_ < 1) {
    throw std::invalid_argument("KrausChannel: empty operator");
  }
  ComplexMatrix completeness = ComplexMatrix::Zero(dim_in_, dim_in_);
  for (const ComplexMatrix& k : ops_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw std::invalid_argument("KrausChannel: operators have mismatched shapes");
    }
    completeness += k.adjoint() * k;
  }
  const double err =
      max_abs_diff(completeness, ComplexMatrix::Identity(dim_in_, dim_in_));
  if (err > kChannelTol) {
    std::ostringstream os;
    os << "KrausChannel: completeness violated, max |sum K^dag K - I| = " << err;
    throw std::invalid_argument(os.str());
  }
}

KrausChannel KrausChannel::identity(int dim) {
  return KrausChannel({ComplexMatrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::fully_depolarizing(int dim) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(dim) * dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
      k(i, j) = scale;
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(ops));
}

std::string UnitaryDilation::invariant_violation(double atol) const {
  if (acts_on.empty()) return "acts_on label not set";
  if (env_dim < 1) return "environment dimension not set";
  if (unitary.rows() != unitary.cols()) return "unitary is not square";
  if (unitary.rows() % env_dim != 0) {
    return "unitary dimension is not divisible by the environment dimension";
  }
  if (env_state.dim() != env_dim) return "environment state dimension mismatch";
  const double err = max_abs_diff(unitary.adjoint() * unitary,
                                  ComplexMatrix::Identity(unitary.rows(), unitary.cols()));
  if (err > atol) {
    std::ostringstream os;
    os << "not unitary: max |U^dag U - I| = " << err;
    return os.str();
  }
  return std::string();
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& state) {
  if (ch.dim_in() != state.dim()) {
    throw std::invalid_argument("apply_channel: channel and state dimensions differ");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const ComplexMatrix& k : ch.ops()) {
    out += k * state.matrix() * k.adjoint();
  }
  const SubsystemDims out_dims = (ch.dim_out() == ch.dim_in())
                                     ? state.dims()
                                     : SubsystemDims::single("out", ch.dim_out());
  return DensityOperator(std::move(out), out_dims, state.tol());
}

DensityOperator apply_local_channel(const KrausChannel& ch, const DensityOperator& state,
                                    const std::string& side) {
  const SubsystemDims& dims = state.dims();
  if (ch.dim_in() != ch.dim_out()) {
    throw std::invalid_argument("apply_local_channel: channel must preserve the dimension");
  }
  if (ch.dim_in() != dims.dim_of(side)) {
    throw std::invalid_argument("apply_local_channel: channel does not match side '" + side +
                                "'");
  }
  ComplexMatrix out = ComplexMatrix::Zero(state.dim(), state.dim());
  for (const ComplexMatrix& k : ch.ops()) {
    const ComplexMatrix lifted = embed_one_site(k, dims, side);
    out += lifted * state.matrix() * lifted.adjoint();
  }
  return DensityOperator(std::move(out), dims, state.tol());
}

UnitaryDilation stinespring_dilation(const KrausChannel& ch, const std::string& acts_on,
                                     int min_env_dim) {
  if (ch.dim_in() != ch.dim_out()) {
    throw std::invalid_argument("stinespring_dilation: square channels only");
  }
  const int d = ch.dim_in();
  const int e = std::max(ch.size(), std::max(min_env_dim, 1));
  const long n = static_cast<long>(d) * e;

  // Isometry columns: U (|j>_S |0>_E) = sum_k (K_k |j>) (x) |k>_E,
  // system slow, environment fast.
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  std::vector<bool> fixed(n, false);
  for (int j = 0; j < d; ++j) {
    const long col = static_cast<long>(j) * e;
    for (int k = 0; k < ch.size(); ++k) {
      for (int i = 0; i < d; ++i) {
        u(static_cast<long>(i) * e + k, col) = ch.ops()[k](i, j);
      }
    }
    fixed[col] = true;
  }
  complete_unitary(u, fixed);

  ComplexMatrix env = ComplexMatrix::Zero(e, e);
  env(0, 0) = 1.0;
  UnitaryDilation dilation{std::move(u), e,
                           DensityOperator(std::move(env), SubsystemDims::single("E", e)),
                           acts_on};
  const std::string why = dilation.invariant_violation();
  if (!why.empty()) {
    throw std::runtime_error("stinespring_dilation: " + why);
  }
  return dilation;
}

ComplexMatrix dilation_induced_apply(const UnitaryDilation& dilation, const ComplexMatrix& x) {
  const int e = dilation.env_dim;
  const long n = dilation.unitary.rows();
  const long d = n / e;
  if (x.rows() != d || x.cols() != d) {
    throw std::invalid_argument("dilation_induced_apply: operator dimension mismatch");
  }
  const ComplexMatrix joint =
      dilation.unitary * tensor_product(x, dilation.env_state.matrix()) *
      dilation.unitary.adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < e; ++k) {
        sum += joint(i * e + k, j * e + k);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

double channel_difference_on_operator_basis(const KrausChannel& ch,
                                            const UnitaryDilation& dilation) {
  const int d = ch.dim_in();
  double worst = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(a, b) = 1.0;
      ComplexMatrix via_kraus = ComplexMatrix::Zero(d, d);
      for (const ComplexMatrix& k : ch.ops()) {
        via_kraus += k * unit * k.adjoint();
      }
      worst = std::max(worst, max_abs_diff(via_kraus, dilation_induced_apply(dilation, unit)));
    }
  }
  return worst;
}

ProcessOutcome run_process(const DensityOperator& state_AB, const UnitaryDilation& dilation) {
  const std::string why = dilation.invariant_violation();
  if (!why.empty()) {
    throw std::invalid_argument("run_process: invalid dilation: " + why);
  }
  const SubsystemDims& ab_dims = state_AB.dims();
  if (!ab_dims.has(dilation.acts_on)) {
    throw std::invalid_argument("run_process: state has no subsystem '" + dilation.acts_on +
                                "'");
  }
  const long side_dim = ab_dims.dim_of(dilation.acts_on);
  if (side_dim * dilation.env_dim != dilation.unitary.rows()) {
    throw std::invalid_argument("run_process: dilation does not match the acted subsystem");
  }

  const std::string env_label = free_env_label(ab_dims);
  const DensityOperator env(dilation.env_state.matrix(),
                            SubsystemDims::single(env_label, dilation.env_dim),
                            dilation.env_state.tol());

  DensityOperator before = tensor(state_AB, env);
  const ComplexMatrix u_full =
      embed_two_site(dilation.unitary, before.dims(), dilation.acts_on, env_label);
  ComplexMatrix after_m = u_full * before.matrix() * u_full.adjoint();
  // Unitary conjugation preserves Hermiticity only up to rounding; fold
  // the residue back before validation.
  after_m = 0.5 * (after_m + after_m.adjoint().eval());
  DensityOperator after(std::move(after_m), before.dims(), before.tol());

  const double s_before = von_neumann_entropy(before);
  const double s_after = von_neumann_entropy(after);
  if (std::abs(s_before - s_after) > 1e-9) {
    std::ostringstream os;
    os << "run_process: global entropy not conserved, |dS| = " << std::abs(s_before - s_after);
    throw std::runtime_error(os.str());
  }

  ProcessOutcome outcome{
      std::move(before),
      after,
      partial_trace(after, ab_dims.labels()),
      partial_trace(after, {env_label}),
      env_label,
  };
  return outcome;
}

DensityOperator thermal_state(const ComplexMatrix& hamiltonian, double beta,
                              const SubsystemDims& dims) {
  if (beta < 0.0) {
    throw std::invalid_argument("thermal_state: beta must be non-negative");
  }
  if (hamiltonian.rows() != dims.total_dim()) {
    throw std::invalid_argument("thermal_state: Hamiltonian does not match dimensions");
  }
  const EigenDecomposition eig = hermitian_eigen(hamiltonian);
  const double e_min = eig.eigenvalues.minCoeff();
  RealVector weights(eig.eigenvalues.size());
  double z = 0.0;
  // Shift by the ground energy so the exponentials stay in range.
  for (long l = 0; l < weights.size(); ++l) {
    weights(l) = std::exp(-beta * (eig.eigenvalues(l) - e_min));
    z += weights(l);
  }
  weights /= z;
  ComplexMatrix rho =
      eig.eigenvectors * weights.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityOperator(std::move(rho), dims);
}

DensityOperator thermal_state(const ComplexMatrix& hamiltonian, double beta,
                              const std::string& label) {
  return thermal_state(hamiltonian, beta,
                       SubsystemDims::single(label, static_cast<int>(hamiltonian.rows())));
}

KrausChannel thermalizing_channel(const ComplexMatrix& hamiltonian, double beta,
                                  const ComplexMatrix& input_basis) {
  const long d = hamiltonian.rows();
  if (input_basis.rows() != d || input_basis.cols() != d) {
    throw std::invalid_argument("thermalizing_channel: basis dimension mismatch");
  }
  if (max_abs_diff(input_basis.adjoint() * input_basis, ComplexMatrix::Identity(d, d)) >
      kChannelTol) {
    throw std::invalid_argument("thermalizing_channel: input basis is not orthonormal");
  }
  if (beta < 0.0) {
    throw std::invalid_argument("thermalizing_channel: beta must be non-negative");
  }

  const EigenDecomposition eig = hermitian_eigen(hamiltonian);
  const double e_min = eig.eigenvalues.minCoeff();
  RealVector weights(d);
  double z = 0.0;
  for (long l = 0; l < d; ++l) {
    weights(l) = std::exp(-beta * (eig.eigenvalues(l) - e_min));
    z += weights(l);
  }
  weights /= z;

  // F_{ln} = sqrt(w_l) |l><psi_n|, ordered with l slow and n fast.
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(d) * d);
  for (long l = 0; l < d; ++l) {
    const double root = std::sqrt(weights(l));
    for (long n = 0; n < d; ++n) {
      ops.push_back(root * eig.eigenvectors.col(l) * input_basis.col(n).adjoint());
    }
  }
  return KrausChannel(std::move(ops));
}

UnitaryDilation thermalizing_dilation(const ComplexMatrix& hamiltonian, double beta,
                                      const ComplexMatrix& input_basis,
                                      const std::string& acts_on) {
  return stinespring_dilation(thermalizing_channel(hamiltonian, beta, input_basis), acts_on);
}

UnitaryDilation bleaching_dilation(const std::vector<double>& hiding_distribution,
                                   const ComplexMatrix& env_basis, int dim_B,
                                   const std::string& acts_on) {
  const int n_hide = static_cast<int>(hiding_distribution.size());
  if (n_hide < 1) {
    throw std::invalid_argument("bleaching_dilation: empty hiding distribution");
  }
  if (n_hide > dim_B) {
    throw std::invalid_argument(
        "bleaching_dilation: distribution longer than the system dimension");
  }
  double total = 0.0;
  for (double p : hiding_distribution) {
    if (p < 0.0) {
      throw std::invalid_argument("bleaching_dilation: negative probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("bleaching_dilation: distribution does not sum to 1");
  }
  const long dim_q = env_basis.rows();
  if (env_basis.cols() < n_hide) {
    throw std::invalid_argument("bleaching_dilation: too few environment basis states");
  }
  const ComplexMatrix gram =
      env_basis.leftCols(n_hide).adjoint() * env_basis.leftCols(n_hide);
  if (max_abs_diff(gram, ComplexMatrix::Identity(n_hide, n_hide)) > kChannelTol) {
    throw std::invalid_argument("bleaching_dilation: environment states are not orthonormal");
  }

  // Environment = (j-register of dim_B) (x) (q-register of dim_q).
  const long e = static_cast<long>(dim_B) * dim_q;
  const long n = dim_B * e;
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  std::vector<bool> fixed(n, false);
  for (int j = 0; j < dim_B; ++j) {
    const long col = static_cast<long>(j) * e;
    // |b_j>|0>_E -> sum_k sqrt(p_k) |k>_B (x) |b_j>(x)|q_k>.
    for (int k = 0; k < n_hide; ++k) {
      const double amp = std::sqrt(hiding_distribution[k]);
      if (amp == 0.0) continue;
      for (long q = 0; q < dim_q; ++q) {
        const Complex v = env_basis(q, k);
        if (v == Complex(0.0, 0.0)) continue;
        const long row = static_cast<long>(k) * e + static_cast<long>(j) * dim_q + q;
        u(row, col) = amp * v;
      }
    }
    fixed[col] = true;
  }
  complete_unitary(u, fixed);

  ComplexMatrix env = ComplexMatrix::Zero(e, e);
  env(0, 0) = 1.0;
  UnitaryDilation dilation{std::move(u), static_cast<int>(e),
                           DensityOperator(std::move(env),
                                           SubsystemDims::single("E", static_cast<int>(e))),
                           acts_on};
  const std::string why = dilation.invariant_violation();
  if (!why.empty()) {
    throw std::runtime_error("bleaching_dilation: " + why);
  }
  return dilation;
}

UnitaryDilation bleaching_dilation(const std::vector<double>& hiding_distribution, int dim_B,
                                   const std::string& acts_on) {
  const int n_hide = static_cast<int>(hiding_distribution.size());
  return bleaching_dilation(hiding_distribution, ComplexMatrix::Identity(n_hide, n_hide),
                            dim_B, acts_on);
}

KrausChannel dephasing_measurement_channel(const ComplexMatrix& basis) {
  if (basis.rows() != basis.cols()) {
    throw std::invalid_argument("dephasing_measurement_channel: basis must be square");
  }
  const long d = basis.rows();
  if (max_abs_diff(basis.adjoint() * basis, ComplexMatrix::Identity(d, d)) > kChannelTol) {
    throw std::invalid_argument("dephasing_measurement_channel: basis is not orthonormal");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (long i = 0; i < d; ++i) {
    ops.push_back(basis.col(i) * basis.col(i).adjoint());
  }
  return KrausChannel(std::move(ops));
}

UnitaryDilation swap_dilation(const DensityOperator& env_state, const std::string& acts_on) {
  const long d = env_state.dim();
  const long n = d * d;
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) {
      u(b * d + a, a * d + b) = 1.0;
    }
  }
  return UnitaryDilation{std::move(u), static_cast<int>(d), env_state, acts_on};
}

}  // namespace qerase
