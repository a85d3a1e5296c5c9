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

#include "cdc/serialize.hpp"

#include <cstdio>

#include "cdc/error.hpp"

namespace cdc::io {
namespace {

using nlohmann::json;

json matrix_to_json(const ff::FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).value());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json plan_to_json(const scheme::SchemePlan& plan) {
  json doc;
  doc["schema_version"] = kPlanSchemaVersion;
  doc["params"] = {{"n", plan.n()},
                   {"t", plan.t()},
                   {"field", {{"width_bits", plan.field().width()},
                              {"reduction_poly", plan.field().reduction_poly()}}}};
  doc["K"] = plan.nodes();
  doc["N"] = plan.files();
  doc["Q"] = plan.functions();
  doc["r"] = plan.computation_load();
  doc["s"] = plan.replication();
  doc["blocks"] = plan.design().blocks;
  json placement = json::array();
  json assignment = json::array();
  for (int c = 0; c < plan.n(); ++c) {
    placement.push_back(plan.placement(c));
    assignment.push_back(plan.assignment(c));
  }
  doc["placement"] = std::move(placement);
  doc["assignment"] = std::move(assignment);
  json coeffs = json::array();
  for (const auto& a : plan.coeffs()) coeffs.push_back(a.value());
  doc["coefficients"] = std::move(coeffs);
  json encoders = json::array();
  for (const auto& enc : plan.encoders()) {
    encoders.push_back({{"file", enc.file},
                        {"senders", enc.senders},
                        {"columns", enc.columns},
                        {"matrix", matrix_to_json(enc.matrix)}});
  }
  doc["encoders"] = std::move(encoders);
  return doc;
}

scheme::SchemePlan plan_from_json(const json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != kPlanSchemaVersion) {
      throw ParameterError("unsupported plan schema_version");
    }
    const json& params = doc.at("params");
    const auto field = ff::FieldSpec::make(params.at("field").at("width_bits").get<unsigned>(),
                                           params.at("field").at("reduction_poly").get<std::uint32_t>());
    scheme::SchemePlan plan =
        scheme::build_scheme(params.at("n").get<int>(), params.at("t").get<int>(), field);
    const json rebuilt = plan_to_json(plan);
    for (const char* key : {"K", "N", "Q", "r", "s", "blocks", "placement", "assignment",
                            "coefficients", "encoders"}) {
      if (doc.at(key) != rebuilt.at(key)) {
        throw ParameterError(std::string("plan field '") + key + "' disagrees with its parameters");
      }
    }
    return plan;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed plan document: ") + e.what());
  }
}

std::string payload_hex(const ff::FieldElement& value) {
  const int digits = static_cast<int>((value.spec().width() + 3) / 4);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*x", digits, value.value());
  return buf;
}

void write_transcript_jsonl(std::ostream& out, const engine::ShuffleTranscript& transcript) {
  for (const auto& s : transcript.signals) {
    const json line = {{"sender", s.sender},
                       {"file", s.file},
                       {"slot", s.slot},
                       {"payload", payload_hex(s.payload)}};
    out << line.dump() << '\n';
  }
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char ch : f) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  }
  out_ << "\r\n";
}

void write_load_csv(std::ostream& out, std::span<const metrics::LoadReport> reports) {
  CsvWriter csv(out);
  csv.row({"scheme", "K", "r", "s", "N", "Q", "load_num", "load_den", "load_float"});
  for (const auto& rep : reports) {
    csv.row({rep.scheme_name, rep.K.str(), rep.r.str(), rep.s.str(), rep.N.str(), rep.Q.str(),
             boost::multiprecision::numerator(rep.load).str(),
             boost::multiprecision::denominator(rep.load).str(), rep.load_float});
  }
}

}  // namespace cdc::io
