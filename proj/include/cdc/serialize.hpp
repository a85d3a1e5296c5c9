// Copyright 2026 The cdc-forge Authors
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

// File formats: scheme plan JSON, shuffle transcript JSON lines, RFC 4180 CSV.

#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdc/engine.hpp"
#include "cdc/metrics.hpp"
#include "cdc/scheme.hpp"

namespace cdc::io {

inline constexpr int kPlanSchemaVersion = 1;

/// {"schema_version": 1, "params": {...}, "K", "N", "Q", "r", "s", "blocks",
///  "placement", "assignment", "coefficients", "encoders": [{"file",
///  "senders", "columns", "matrix"}]} with field elements as integers.
nlohmann::json plan_to_json(const scheme::SchemePlan& plan);

/// Rebuilds the plan from its parameters and checks every stored table
/// against the rebuilt one. Throws ParameterError on a schema or content
/// mismatch.
scheme::SchemePlan plan_from_json(const nlohmann::json& doc);

/// Lowercase hex, ceil(T/4) digits.
std::string payload_hex(const ff::FieldElement& value);

/// One JSON object per signal per line: {"sender","file","slot","payload"}.
void write_transcript_jsonl(std::ostream& out, const engine::ShuffleTranscript& transcript);

/// RFC 4180 writer: CRLF line ends, fields quoted when they contain a comma,
/// quote, CR or LF.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

/// Header scheme,K,r,s,N,Q,load_num,load_den,load_float, then one row per report.
void write_load_csv(std::ostream& out, std::span<const metrics::LoadReport> reports);

}  // namespace cdc::io
