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

namespace qerase {

/// Ordered list of local Hilbert-space dimensions with unique labels.
///
/// The order fixes the tensor-index convention for the whole library:
/// the leftmost subsystem is the slowest index, so a flat basis index is
/// i = ((i_0 * d_1 + i_1) * d_2 + i_2) * ... for subsystems 0, 1, 2, ...
class SubsystemDims {
 public:
  SubsystemDims(std::vector<int> dims, std::vector<std::string> labels);

  static SubsystemDims single(const std::string& label, int dim);

  int total_dim() const { return total_; }
  int count() const { return static_cast<int>(dims_.size()); }

  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int dim_at(int position) const { return dims_.at(position); }
  int dim_of(const std::string& label) const { return dims_.at(position_of(label)); }

  /// Position of a label; throws std::invalid_argument for unknown labels.
  int position_of(const std::string& label) const;
  bool has(const std::string& label) const;

  /// Signature restricted to `keep`, preserving this object's order.
  SubsystemDims subset(const std::vector<std::string>& keep) const;

  SubsystemDims appended(const std::string& label, int dim) const;

  /// Joins all subsystems into one label (used when a channel output does
  /// not preserve the factor structure).
  SubsystemDims merged(const std::string& label) const;

  bool operator==(const SubsystemDims& other) const = default;

  /// Decomposes a flat basis index into per-subsystem indices.
  std::vector<int> unpack(long flat) const;
  long pack(const std::vector<int>& multi) const;

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  int total_ = 1;
};

}  // namespace qerase
