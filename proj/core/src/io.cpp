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

#include "qerase/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qerase/version.hpp"

namespace qerase {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (long r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (long c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(what + ": expected a non-empty array of rows");
  }
  const long rows = static_cast<long>(j.size());
  long cols = -1;
  ComplexMatrix m;
  for (long r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.empty()) {
      throw ParseError(what + ": row " + std::to_string(r) + " is not a non-empty array");
    }
    if (cols < 0) {
      cols = static_cast<long>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<long>(row.size()) != cols) {
      throw ParseError(what + ": ragged rows");
    }
    for (long c = 0; c < cols; ++c) {
      const Json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") is not a [re, im] pair");
      }
      m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

Json check_to_json(const BoundCheckResult& check) {
  Json j;
  j["name"] = check.name;
  j["lhs"] = check.lhs;
  j["rhs"] = check.rhs;
  j["tolerance"] = check.tolerance;
  j["satisfied"] = check.satisfied;
  j["margin"] = check.margin;
  return j;
}

Json correlation_to_json(const CorrelationReport& report) {
  Json j;
  j["mutual_information"] = report.mutual_information;
  j["classical_correlation"] = report.classical_correlation;
  j["discord"] = report.discord;
  j["conditional_entropy"] = report.conditional_entropy;
  j["measured_conditional_entropy"] = report.measured_conditional_entropy;
  j["measured_side"] = report.measured_side;
  j["measurement_class"] = report.measurement_class;
  j["optimizer_slack"] = report.optimizer_slack;
  Json projectors = Json::array();
  for (const ComplexMatrix& p : report.optimal_measurement.projectors) {
    projectors.push_back(matrix_to_json(p));
  }
  j["optimal_measurement"] = {{"side", report.optimal_measurement.side},
                              {"dim", report.optimal_measurement.dim},
                              {"projectors", std::move(projectors)}};
  return j;
}

Json ledger_to_json(const EntropyLedger& ledger) {
  Json j;
  j["S_AB_before"] = ledger.S_AB_before;
  j["S_AB_after"] = ledger.S_AB_after;
  j["S_E_before"] = ledger.S_E_before;
  j["S_E_after"] = ledger.S_E_after;
  j["delta_S_T"] = ledger.delta_S_T;
  j["D_before"] = ledger.D_before;
  j["D_after"] = ledger.D_after;
  j["delta_D"] = ledger.delta_D;
  j["J_before"] = ledger.J_before;
  j["J_after"] = ledger.J_after;
  j["I_before"] = ledger.I_before;
  j["I_after"] = ledger.I_after;
  j["S_B_before"] = ledger.S_B_before;
  j["S_B_after"] = ledger.S_B_after;
  j["conditional_S_B_given_A"] = ledger.conditional_S_B_given_A;
  j["optimizer_slack"] = ledger.optimizer_slack;
  j["check_tolerance"] = ledger.check_tolerance();
  j["measured_side"] = ledger.measured_side;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << text;
}

Json parse_or_throw(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(what + ": malformed JSON");
  }
  return j;
}

std::string csv_safe(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

}  // namespace

StateFile parse_state_json(const std::string& text) {
  const Json j = parse_or_throw(text, "state file");
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw ParseError("state file: expected an object with 'dims' and 'matrix'");
  }
  const Json& jd = j["dims"];
  if (!jd.is_array() || jd.empty()) {
    throw ParseError("state file: 'dims' must be a non-empty array");
  }
  std::vector<int> dims;
  for (const Json& d : jd) {
    if (!d.is_number_integer() || d.get<int>() < 1) {
      throw ParseError("state file: 'dims' entries must be positive integers");
    }
    dims.push_back(d.get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& jl = j["labels"];
    if (!jl.is_array() || jl.size() != dims.size()) {
      throw ParseError("state file: 'labels' must match 'dims' in length");
    }
    for (const Json& l : jl) {
      if (!l.is_string()) throw ParseError("state file: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      labels.push_back(std::string(1, static_cast<char>('A' + i)));
    }
  }

  StateFile out;
  try {
    out.dims = SubsystemDims(std::move(dims), std::move(labels));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("state file: ") + ex.what());
  }
  out.matrix = matrix_from_json(j["matrix"], "state file matrix");
  if (out.matrix.rows() != out.matrix.cols() ||
      out.matrix.rows() != out.dims.total_dim()) {
    throw ParseError("state file: matrix shape does not match 'dims'");
  }
  return out;
}

StateFile read_state_json(const std::string& path) {
  return parse_state_json(read_text_file(path));
}

std::string to_state_json(const DensityOperator& state) {
  Json j;
  j["dims"] = state.dims().dims();
  j["labels"] = state.dims().labels();
  j["matrix"] = matrix_to_json(state.matrix());
  return j.dump(2) + "\n";
}

void write_state_json(const std::string& path, const DensityOperator& state) {
  write_text_file(path, to_state_json(state));
}

KrausChannel parse_channel_json(const std::string& text) {
  const Json j = parse_or_throw(text, "channel file");
  if (!j.is_object() || !j.contains("kraus")) {
    throw ParseError("channel file: expected an object with 'kraus'");
  }
  const Json& jk = j["kraus"];
  if (!jk.is_array() || jk.empty()) {
    throw ParseError("channel file: 'kraus' must be a non-empty array");
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < jk.size(); ++i) {
    ops.push_back(matrix_from_json(jk[i], "channel operator " + std::to_string(i)));
  }
  try {
    return KrausChannel(std::move(ops));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("channel file: ") + ex.what());
  }
}

KrausChannel read_channel_json(const std::string& path) {
  return parse_channel_json(read_text_file(path));
}

std::string to_channel_json(const KrausChannel& channel) {
  Json j;
  j["dim_in"] = channel.dim_in();
  j["dim_out"] = channel.dim_out();
  Json ops = Json::array();
  for (const ComplexMatrix& k : channel.ops()) {
    ops.push_back(matrix_to_json(k));
  }
  j["kraus"] = std::move(ops);
  return j.dump(2) + "\n";
}

std::string to_report_json(const ReportRecord& record) {
  Json j;
  j["command"] = record.command;
  if (!record.scenario.empty()) j["scenario"] = record.scenario;
  j["version"] = kVersionString;
  j["units"] = {{"entropy", "bits"}, {"work", "joules, kT ln2 per bit"}};
  if (!record.input_digest.empty()) j["input_digest"] = record.input_digest;
  j["seed"] = record.seed;
  // A lone before-report is the whole payload for plain discord runs.
  if (record.before && !record.after && !record.ledger) {
    j["report"] = correlation_to_json(*record.before);
  } else if (record.before) {
    j["before"] = correlation_to_json(*record.before);
  }
  if (record.after) j["after"] = correlation_to_json(*record.after);
  if (record.ledger) j["ledger"] = ledger_to_json(*record.ledger);
  if (!record.checks.empty()) {
    Json checks = Json::array();
    for (const BoundCheckResult& c : record.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
  }
  if (record.work) {
    j["work"] = {{"W_joules", record.work->W}, {"W_min_joules", record.work->W_min}};
  }
  if (record.landauer) {
    const LandauerReport& l = *record.landauer;
    Json lj;
    lj["entropy_sum"] = check_to_json(l.entropy_sum);
    lj["energy_erasure"] = check_to_json(l.energy_erasure);
    lj["bath_energy_change"] = l.bath_energy_change;
    lj["bath_energy_change_bits"] = l.bath_energy_change_bits;
    lj["erased_bits"] = l.erased_bits;
    lj["initial_system_entropy"] = l.initial_system_entropy;
    lj["final_system_entropy"] = l.final_system_entropy;
    if (l.energy_conservation_residual) {
      lj["energy_conservation_residual"] = *l.energy_conservation_residual;
    }
    j["landauer"] = std::move(lj);
  }
  if (record.compensation) {
    j["mutual_information_compensation"] = {
        {"nonincreasing", check_to_json(record.compensation->nonincreasing)},
        {"compensation", check_to_json(record.compensation->compensation)},
        {"total_identity", check_to_json(record.compensation->total_identity)}};
  }
  if (!record.notes.empty()) j["notes"] = record.notes;
  return j.dump(2) + "\n";
}

void write_report_json(const std::string& path, const ReportRecord& record) {
  write_text_file(path, to_report_json(record));
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string to_montecarlo_csv(const MonteCarloSummary& summary) {
  std::ostringstream out;
  out << "trial,rank,kraus_count,D_before,D_after,delta_D,delta_S_T,delta_J,slack,"
         "margin_delta_s_t,margin_erasure,margin_generalized_landauer,"
         "margin_mi_nonincreasing,margin_mi_compensation,margin_creation,ok,error\n";
  for (const TrialRecord& r : summary.records) {
    out << r.trial << ',' << r.rank << ',' << r.kraus_count << ',' << format_double(r.D_before)
        << ',' << format_double(r.D_after) << ',' << format_double(r.delta_D) << ','
        << format_double(r.delta_S_T) << ',' << format_double(r.delta_J) << ','
        << format_double(r.slack) << ',' << format_double(r.margin_delta_s_t) << ','
        << format_double(r.margin_erasure) << ','
        << format_double(r.margin_generalized_landauer) << ','
        << format_double(r.margin_mi_nonincreasing) << ','
        << format_double(r.margin_mi_compensation) << ',';
    if (r.margin_creation) out << format_double(*r.margin_creation);
    out << ',' << (r.ok ? 1 : 0) << ',' << csv_safe(r.error) << '\n';
  }
  out << "# summary seed=" << summary.seed << " trials=" << summary.trials << " dims="
      << summary.dim_A << "x" << summary.dim_B << " slack=" << format_double(summary.slack)
      << '\n';
  for (const CheckStat& stat : summary.checks) {
    out << "# check," << stat.name << ',' << stat.evaluations << ',' << stat.violations << ','
        << format_double(stat.min_margin) << '\n';
  }
  out << "# total_violations=" << summary.total_violations
      << " trial_errors=" << summary.trial_errors
      << " delta_J_negative_beyond_slack=" << summary.delta_J_negative_beyond_slack << '\n';
  return out.str();
}

void write_montecarlo_csv(const std::string& path, const MonteCarloSummary& summary) {
  write_text_file(path, to_montecarlo_csv(summary));
}

std::string to_summary_json(const MonteCarloSummary& summary) {
  Json j;
  j["seed"] = summary.seed;
  j["trials"] = summary.trials;
  j["dim_A"] = summary.dim_A;
  j["dim_B"] = summary.dim_B;
  j["slack"] = summary.slack;
  Json checks = Json::array();
  for (const CheckStat& stat : summary.checks) {
    checks.push_back({{"name", stat.name},
                      {"evaluations", stat.evaluations},
                      {"violations", stat.violations},
                      {"min_margin", stat.min_margin}});
  }
  j["checks"] = std::move(checks);
  j["delta_J_negative_beyond_slack"] = summary.delta_J_negative_beyond_slack;
  j["trial_errors"] = summary.trial_errors;
  j["total_violations"] = summary.total_violations;
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace qerase
