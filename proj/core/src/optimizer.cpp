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

#include "qerase/optimizer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qerase/errors.hpp"
#include "qerase/rng.hpp"

namespace qerase {

namespace {

constexpr double kPi = std::numbers::pi;

double clamped_term(double x) {
  if (x <= kEntropyClamp) return 0.0;
  return -x * std::log2(x);
}

// Binary entropy of a clamped probability.
double binary_entropy(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return clamped_term(p) + clamped_term(1.0 - p);
}

/// Measurement objective sum_i p_i S(rho_{rest|i}) evaluated without
/// constructing validated state objects: the optimizer calls this tens of
/// thousands of times and the PSD check would dominate the runtime.
/// Semantics match measure_branches exactly (same branch cutoff, same
/// entropy clamp).
class BranchObjective {
 public:
  BranchObjective(const DensityOperator& state, const std::string& side) {
    const SubsystemDims& dims = state.dims();
    rho_ = &state.matrix();
    side_dim_ = dims.dim_of(side);
    const int side_pos = dims.position_of(side);

    std::vector<std::string> rest;
    for (const auto& label : dims.labels()) {
      if (label != side) rest.push_back(label);
    }
    const SubsystemDims rest_dims = dims.subset(rest);
    rest_dim_ = rest_dims.total_dim();

    offset_.assign(static_cast<std::size_t>(rest_dim_) * side_dim_, 0);
    for (long g = 0; g < dims.total_dim(); ++g) {
      const std::vector<int> multi = dims.unpack(g);
      const int s = multi[side_pos];
      std::vector<int> rest_multi;
      rest_multi.reserve(multi.size() - 1);
      for (int i = 0; i < dims.count(); ++i) {
        if (i != side_pos) rest_multi.push_back(multi[i]);
      }
      const long r = rest_dims.pack(rest_multi);
      offset_[static_cast<std::size_t>(r) * side_dim_ + s] = g;
    }
  }

  double evaluate_basis(const ComplexMatrix& basis) const {
    double total = 0.0;
    ComplexMatrix cond(rest_dim_, rest_dim_);
    for (int col = 0; col < side_dim_; ++col) {
      // Unnormalized conditional state <v| rho |v> contracted over the
      // measured side; its trace is the branch probability.
      for (long r = 0; r < rest_dim_; ++r) {
        for (long c = 0; c < rest_dim_; ++c) {
          Complex sum = 0.0;
          for (int s = 0; s < side_dim_; ++s) {
            const long row = offset_[static_cast<std::size_t>(r) * side_dim_ + s];
            Complex partial = 0.0;
            for (int t = 0; t < side_dim_; ++t) {
              partial += (*rho_)(row, offset_[static_cast<std::size_t>(c) * side_dim_ + t]) *
                         basis(t, col);
            }
            sum += std::conj(basis(s, col)) * partial;
          }
          cond(r, c) = sum;
        }
      }
      const double p = cond.trace().real();
      if (p < kBranchCutoff) continue;
      total += p * normalized_entropy(cond, p);
    }
    return total;
  }

  double operator()(int dim, std::span<const double> angles) const {
    return evaluate_basis(measurement_basis_from_angles(dim, angles));
  }

 private:
  double normalized_entropy(const ComplexMatrix& cond, double p) const {
    if (rest_dim_ == 2) {
      // Closed-form eigenvalues of a 2x2 Hermitian PSD matrix.
      const double a = cond(0, 0).real() / p;
      const double d = cond(1, 1).real() / p;
      const double off = std::abs(cond(0, 1)) / p;
      const double det = a * d - off * off;
      const double radicand = std::max(0.0, 1.0 - 4.0 * det);
      return binary_entropy(0.5 * (1.0 + std::sqrt(radicand)));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(cond / p, Eigen::EigenvaluesOnly);
    double h = 0.0;
    for (long i = 0; i < solver.eigenvalues().size(); ++i) {
      h += clamped_term(solver.eigenvalues()(i));
    }
    return h;
  }

  const ComplexMatrix* rho_ = nullptr;
  int side_dim_ = 0;
  long rest_dim_ = 0;
  std::vector<long> offset_;
};

ComplexMatrix givens_with_phase(int dim, int i, int j, double theta, double phi) {
  ComplexMatrix g = ComplexMatrix::Identity(dim, dim);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex phase(std::cos(phi), std::sin(phi));
  g(i, i) = c;
  g(i, j) = -s * std::conj(phase);
  g(j, i) = s * phase;
  g(j, j) = c;
  return g;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (grid_resolution < 8) {
    throw std::invalid_argument("OptimizerConfig: grid_resolution must be at least 8");
  }
  if (refinement_iterations < 0 || random_restarts < 0) {
    throw std::invalid_argument("OptimizerConfig: iteration counts must be non-negative");
  }
  if (!(convergence_tol > 0.0)) {
    throw std::invalid_argument("OptimizerConfig: convergence_tol must be positive");
  }
}

int measurement_parameter_count(int dim) {
  if (dim == 2) return 2;
  if (dim == 3 || dim == 4) return dim * (dim - 1);
  throw UnsupportedDimension("measurement_parameter_count: supported dimensions are 2, 3, 4");
}

ComplexMatrix measurement_basis_from_angles(int dim, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != measurement_parameter_count(dim)) {
    throw std::invalid_argument("measurement_basis_from_angles: wrong angle count");
  }
  if (dim == 2) {
    const double theta = angles[0];
    const double phi = angles[1];
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex phase(std::cos(phi), std::sin(phi));
    ComplexMatrix basis(2, 2);
    basis(0, 0) = c;
    basis(1, 0) = s * phase;
    basis(0, 1) = -s * std::conj(phase);
    basis(1, 1) = c;
    return basis;
  }
  // Product of two-level rotations over all index pairs. Column phases
  // are omitted on purpose: they cancel in the projectors.
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      u = u * givens_with_phase(dim, i, j, angles[k], angles[k + 1]);
      k += 2;
    }
  }
  return u;
}

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> start, double initial_step,
                          int max_iterations, double ftol) {
  const int n = static_cast<int>(start.size());
  if (n < 1) throw std::invalid_argument("nelder_mead: empty start point");
  if (!(initial_step > 0.0)) throw std::invalid_argument("nelder_mead: step must be positive");

  constexpr double kAlpha = 1.0;  // reflection
  constexpr double kGamma = 2.0;  // expansion
  constexpr double kRho = 0.5;    // contraction
  constexpr double kSigma = 0.5;  // shrink

  std::vector<std::vector<double>> verts(n + 1, std::vector<double>(start.begin(), start.end()));
  std::vector<double> values(n + 1);
  for (int i = 0; i < n; ++i) verts[i + 1][i] += initial_step;
  for (int i = 0; i <= n; ++i) values[i] = f(verts[i]);

  std::vector<int> order(n + 1);
  int iterations = 0;
  std::vector<double> centroid(n), reflected(n), trial(n);

  while (iterations < max_iterations) {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] < values[b]; });
    const int best = order[0];
    const int worst = order[n];
    const int second_worst = order[n - 1];
    if (values[worst] - values[best] < ftol) break;
    ++iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (int i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (int k = 0; k < n; ++k) centroid[k] += verts[i][k];
    }
    for (int k = 0; k < n; ++k) centroid[k] /= n;

    for (int k = 0; k < n; ++k) {
      reflected[k] = centroid[k] + kAlpha * (centroid[k] - verts[worst][k]);
    }
    const double f_reflected = f(reflected);

    if (f_reflected < values[best]) {
      for (int k = 0; k < n; ++k) {
        trial[k] = centroid[k] + kGamma * (reflected[k] - centroid[k]);
      }
      const double f_expanded = f(trial);
      if (f_expanded < f_reflected) {
        verts[worst] = trial;
        values[worst] = f_expanded;
      } else {
        verts[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      verts[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < values[worst];
    const std::vector<double>& toward = outside ? reflected : verts[worst];
    for (int k = 0; k < n; ++k) {
      trial[k] = centroid[k] + kRho * (toward[k] - centroid[k]);
    }
    const double f_contracted = f(trial);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      verts[worst] = trial;
      values[worst] = f_contracted;
      continue;
    }

    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (int k = 0; k < n; ++k) {
        verts[i][k] = verts[best][k] + kSigma * (verts[i][k] - verts[best][k]);
      }
      values[i] = f(verts[i]);
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (values[i] < values[best]) best = i;
  }
  return SimplexResult{verts[best], values[best], iterations};
}

MeasuredConditionalEntropy measured_conditional_entropy(const DensityOperator& state,
                                                        const std::string& side,
                                                        const OptimizerConfig& cfg) {
  cfg.validate();
  const SubsystemDims& dims = state.dims();
  if (!dims.has(side)) {
    throw std::invalid_argument("measured_conditional_entropy: no subsystem '" + side + "'");
  }
  if (dims.count() < 2) {
    throw std::invalid_argument("measured_conditional_entropy: state is not multipartite");
  }
  const int d = dims.dim_of(side);
  if (d != 2 && d != 3 && d != 4) {
    throw UnsupportedDimension(
        "measured_conditional_entropy: measured dimension must be 2, 3 or 4");
  }

  const BranchObjective objective(state, side);
  const auto f = [&](std::span<const double> angles) { return objective(d, angles); };
  const int params = measurement_parameter_count(d);
  const int n = cfg.grid_resolution;

  std::vector<double> best_point(params, 0.0);
  double best_scan = std::numeric_limits<double>::infinity();

  if (d == 2) {
    // Exhaustive Bloch-angle grid. Half-offset thetas avoid the poles,
    // where phi is redundant.
    std::vector<double> point(2);
    for (int i = 0; i < n; ++i) {
      point[0] = kPi * (i + 0.5) / n;
      for (int j = 0; j < n; ++j) {
        point[1] = 2.0 * kPi * j / n;
        const double v = f(point);
        if (v < best_scan) {
          best_scan = v;
          best_point = point;
        }
      }
    }
  } else {
    // The angle space is too large for a grid; scan the same budget of
    // seeded uniform samples instead.
    Rng rng = Rng::substream(cfg.seed, 0x5CA1EDull);
    std::vector<double> point(params);
    const long samples = static_cast<long>(n) * n;
    for (long s = 0; s < samples; ++s) {
      for (int k = 0; k < params; k += 2) {
        point[k] = kPi * rng.uniform();
        point[k + 1] = 2.0 * kPi * rng.uniform();
      }
      const double v = f(point);
      if (v < best_scan) {
        best_scan = v;
        best_point = point;
      }
    }
  }

  std::vector<double> best_refined = best_point;
  double best_value = best_scan;
  const auto consider = [&](const SimplexResult& r) {
    if (r.best_value < best_value) {
      best_value = r.best_value;
      best_refined = r.best_point;
    }
  };

  if (cfg.refinement_iterations > 0) {
    consider(nelder_mead(f, best_point, kPi / n, cfg.refinement_iterations,
                         cfg.convergence_tol));
    for (int r = 0; r < cfg.random_restarts; ++r) {
      Rng rng = Rng::substream(cfg.seed, 0xB0057ull + static_cast<std::uint64_t>(r));
      std::vector<double> start(params);
      for (int k = 0; k < params; k += 2) {
        start[k] = kPi * rng.uniform();
        start[k + 1] = 2.0 * kPi * rng.uniform();
      }
      consider(nelder_mead(f, start, 0.3, cfg.refinement_iterations, cfg.convergence_tol));
    }
  }

  MeasuredConditionalEntropy out;
  out.measurement =
      ProjectiveMeasurement::from_basis(side, measurement_basis_from_angles(d, best_refined));
  // Report the value through the public measurement path so callers can
  // reproduce it exactly from the returned measurement.
  double value = 0.0;
  for (const MeasurementBranch& b : measure_branches(state, out.measurement)) {
    if (b.negligible) continue;
    value += b.probability * von_neumann_entropy(b.conditional_state);
  }
  out.value = value;
  return out;
}

}  // namespace qerase
