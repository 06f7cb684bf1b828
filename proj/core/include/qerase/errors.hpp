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

#include <stdexcept>
#include <string>

namespace qerase {

/// Input file could not be parsed into a valid object. Carries a
/// human-readable diagnostic naming the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A subsystem dimension outside the range a component supports
/// (the measurement optimizer handles d in {2, 3, 4}).
struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qerase
