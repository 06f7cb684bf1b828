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
#include <optional>
#include <string>
#include <vector>

#include "qerase/channels.hpp"
#include "qerase/correlations.hpp"
#include "qerase/ensembles.hpp"
#include "qerase/errors.hpp"
#include "qerase/ledger.hpp"
#include "qerase/state.hpp"

namespace qerase {

/// On-disk density operator. JSON layout:
///   {"dims": [dA, dB, ...], "labels": ["A", "B", ...],
///    "matrix": [[[re, im], ...], ...]}          (row-major, one row per entry)
/// "labels" is optional; missing labels default to "A", "B", "C", ...
struct StateFile {
  SubsystemDims dims = SubsystemDims::single("A", 2);
  ComplexMatrix matrix;
};

/// Parse failures throw ParseError; dimension/shape mismatches too (the
/// file is the malformed artifact, not the caller).
StateFile read_state_json(const std::string& path);
StateFile parse_state_json(const std::string& text);
std::string to_state_json(const DensityOperator& state);
void write_state_json(const std::string& path, const DensityOperator& state);

/// Kraus family on disk: {"dim_in": d, "dim_out": d, "kraus": [matrix, ...]}
/// with the same [re, im] matrix encoding as states.
KrausChannel read_channel_json(const std::string& path);
KrausChannel parse_channel_json(const std::string& text);
std::string to_channel_json(const KrausChannel& channel);

/// One scenario or discord run, rendered to a JSON report. Every report
/// declares units, the tool version, the seed and a digest of its input
/// file, so a stored report is self-describing.
struct ReportRecord {
  std::string command;                 // "discord", "scenario", "montecarlo"
  std::string scenario;                // empty for plain discord runs
  std::string input_digest;            // fnv1a64 of the input file bytes, hex
  std::uint64_t seed = 0;
  std::optional<CorrelationReport> before;
  std::optional<CorrelationReport> after;
  std::optional<EntropyLedger> ledger;
  std::vector<BoundCheckResult> checks;
  std::optional<ErasureWork> work;
  std::optional<LandauerReport> landauer;
  std::optional<MutualInfoCompensation> compensation;
  std::vector<std::string> notes;
};

std::string to_report_json(const ReportRecord& record);
void write_report_json(const std::string& path, const ReportRecord& record);

/// Monte Carlo CSV. Header row then one row per trial; every double is
/// formatted with "%.17g" so repeated runs with one seed are byte-identical.
std::string to_montecarlo_csv(const MonteCarloSummary& summary);
void write_montecarlo_csv(const std::string& path, const MonteCarloSummary& summary);
std::string to_summary_json(const MonteCarloSummary& summary);

/// Fixed-format double used by every writer above.
std::string format_double(double value);

/// FNV-1a 64-bit digest of a byte string; handy for determinism checks.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace qerase
