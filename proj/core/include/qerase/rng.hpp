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

#include <cstdint>
#include <random>

#include "qerase/types.hpp"

namespace qerase {

/// Deterministic random source: mt19937_64 with hand-rolled variate
/// transforms, so streams are bit-identical across platforms and
/// standard-library implementations (std::uniform_real_distribution and
/// friends are not portable). Per-index substreams are derived by a
/// splitmix64 hash of (seed, index), independent of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform();                 // [0, 1)
  double normal();                  // standard Gaussian (Box-Muller)
  Complex complex_normal();         // re, im ~ N(0, 1)
  int uniform_int(int lo, int hi);  // inclusive, unbiased

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 step, exposed for seed mixing.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace qerase
