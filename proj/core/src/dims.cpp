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

#include "qerase/dims.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qerase {

SubsystemDims::SubsystemDims(std::vector<int> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) {
    throw std::invalid_argument("SubsystemDims: at least one subsystem required");
  }
  if (dims_.size() != labels_.size()) {
    throw std::invalid_argument("SubsystemDims: dims and labels sizes differ");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1) {
      throw std::invalid_argument("SubsystemDims: dimension of '" + labels_[i] +
                                  "' must be positive");
    }
    if (labels_[i].empty()) {
      throw std::invalid_argument("SubsystemDims: empty label");
    }
    if (!seen.insert(labels_[i]).second) {
      throw std::invalid_argument("SubsystemDims: duplicate label '" + labels_[i] + "'");
    }
    total_ *= dims_[i];
  }
}

SubsystemDims SubsystemDims::single(const std::string& label, int dim) {
  return SubsystemDims({dim}, {label});
}

int SubsystemDims::position_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("SubsystemDims: unknown label '" + label + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

bool SubsystemDims::has(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

SubsystemDims SubsystemDims::subset(const std::vector<std::string>& keep) const {
  if (keep.empty()) {
    throw std::invalid_argument("SubsystemDims::subset: empty selection");
  }
  std::vector<int> d;
  std::vector<std::string> l;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (std::find(keep.begin(), keep.end(), labels_[i]) != keep.end()) {
      d.push_back(dims_[i]);
      l.push_back(labels_[i]);
    }
  }
  if (l.size() != keep.size()) {
    for (const auto& k : keep) {
      if (!has(k)) {
        throw std::invalid_argument("SubsystemDims::subset: unknown label '" + k + "'");
      }
    }
    throw std::invalid_argument("SubsystemDims::subset: duplicate label in selection");
  }
  return SubsystemDims(std::move(d), std::move(l));
}

SubsystemDims SubsystemDims::appended(const std::string& label, int dim) const {
  std::vector<int> d = dims_;
  std::vector<std::string> l = labels_;
  d.push_back(dim);
  l.push_back(label);
  return SubsystemDims(std::move(d), std::move(l));
}

SubsystemDims SubsystemDims::merged(const std::string& label) const {
  return SubsystemDims({total_}, {label});
}

std::vector<int> SubsystemDims::unpack(long flat) const {
  if (flat < 0 || flat >= total_) {
    throw std::out_of_range("SubsystemDims::unpack: index out of range");
  }
  std::vector<int> multi(dims_.size());
  for (int i = count() - 1; i >= 0; --i) {
    multi[i] = static_cast<int>(flat % dims_[i]);
    flat /= dims_[i];
  }
  return multi;
}

long SubsystemDims::pack(const std::vector<int>& multi) const {
  if (multi.size() != dims_.size()) {
    throw std::invalid_argument("SubsystemDims::pack: wrong number of indices");
  }
  long flat = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (multi[i] < 0 || multi[i] >= dims_[i]) {
      throw std::out_of_range("SubsystemDims::pack: index out of range");
    }
    flat = flat * dims_[i] + multi[i];
  }
  return flat;
}

}  // namespace qerase
