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

#include "cdc/scheme.hpp"

#include <algorithm>
#include <string>

#include "cdc/error.hpp"

namespace cdc::scheme {

void validate(const SchemeParams& p) {
  const std::string at = " (n = " + std::to_string(p.n) + ", t = " + std::to_string(p.t) + ")";
  if (p.t < 1) throw ParameterError("t ≥ 1 violated" + at);
  if (p.n <= p.t) throw ParameterError("n > t violated" + at);
  if (3 * p.t < 2 * p.n) {
    throw ParameterError("3t ≥ 2n violated: 3t = " + std::to_string(3 * p.t) + " < 2n = " +
                         std::to_string(2 * p.n));
  }
  const long needed = 2L * p.t - p.n + 1;
  if (static_cast<long>(p.field.order()) < needed) {
    throw ParameterError("2^T ≥ 2t − n + 1 violated: 2^" + std::to_string(p.field.width()) +
                         " = " + std::to_string(p.field.order()) + " < " + std::to_string(needed));
  }
}

bool SchemePlan::stores(int node, int file) const {
  return designs::cyclic_contains(params_.n, params_.t, node, file);
}

std::vector<int> SchemePlan::file_holders(int file) const {
  std::vector<int> out;
  for (int c = 0; c < params_.n; ++c) {
    if (stores(c, file)) out.push_back(c);
  }
  return out;
}

std::vector<int> SchemePlan::function_nodes(int q) const {
  // Assignment equals placement.
  return file_holders(q);
}

ff::FieldMatrix encoder_matrix(int n, int t, std::span<const ff::FieldElement> coeffs) {
  if (coeffs.empty() || static_cast<int>(coeffs.size()) != 2 * t - n) {
    throw ParameterError("encoder needs 2t - n = " + std::to_string(2 * t - n) +
                         " coefficients, got " + std::to_string(coeffs.size()));
  }
  const ff::FieldSpec& spec = coeffs.front().spec();
  ff::FieldMatrix m(spec, n - t, n - 1);
  for (int j = 0; j < n - t; ++j) {
    for (int k = j; k <= j + t - 1 && k < n - 1; ++k) {
      if (k <= n - t - 1 || k >= t - 1) {
        m.set(j, k, ff::FieldElement::one(spec));
      } else {
        m.set(j, k, ff::pow(coeffs[k - n + t + 1], static_cast<std::uint64_t>(j)));
      }
    }
  }
  return m;
}

SchemePlan build_scheme(int n, int t, const ff::FieldSpec& field) {
  SchemePlan plan;
  plan.params_ = SchemeParams{n, t, field};
  validate(plan.params_);
  plan.design_ = designs::cyclic_blocks(n, t);
  plan.coeffs_ = ff::distinct_coefficients(static_cast<std::size_t>(2 * t - n), field);
  const ff::FieldMatrix canonical = encoder_matrix(n, t, plan.coeffs_);
  plan.encoders_.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int shift = (i + 1) % n;
    FileEncoder enc{i, {}, {}, canonical};
    for (int j = 0; j < n - t; ++j) enc.senders.push_back((j + shift) % n);
    for (int k = 0; k < n - 1; ++k) enc.columns.push_back((k + shift) % n);
    plan.encoders_.push_back(std::move(enc));
  }
  return plan;
}

std::vector<IVKey> required_iv_set(const SchemePlan& plan, int node) {
  if (node < 0 || node >= plan.n()) throw ParameterError("node index out of range");
  std::vector<IVKey> out;
  for (int q : plan.assignment(node)) {
    for (int x = 0; x < plan.n(); ++x) {
      if (!plan.stores(node, x)) out.push_back({q, x});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CodedSignal> encode_signals(const SchemePlan& plan, int node, const IVMap& local_ivs) {
  if (node < 0 || node >= plan.n()) throw ParameterError("node index out of range");
  const int n = plan.n();
  std::vector<CodedSignal> out;
  for (int i = 0; i < n; ++i) {
    if (plan.stores(node, i)) continue;
    const FileEncoder& enc = plan.encoder(i);
    const int row = ((node - i - 1) % n + n) % n;
    ff::FieldElement acc = ff::FieldElement::zero(plan.field());
    for (int k = 0; k < n - 1; ++k) {
      const ff::FieldElement& coeff = enc.matrix.at(row, k);
      if (coeff.is_zero()) continue;
      const auto it = local_ivs.find({i, enc.columns[k]});
      if (it == local_ivs.end()) {
        throw IncompleteMapPhaseError("node " + std::to_string(node) + " lacks v_{" +
                                      std::to_string(i) + "," + std::to_string(enc.columns[k]) +
                                      "}");
      }
      acc += coeff * it->second;
    }
    out.push_back(CodedSignal{node, i, row, acc});
  }
  return out;
}

std::string signal_formula(const SchemePlan& plan, int file, int slot) {
  const int n = plan.n();
  const int t = plan.t();
  if (slot < 0 || slot >= n - t) throw ParameterError("slot out of range");
  const FileEncoder& enc = plan.encoder(file);
  std::string out;
  for (int k = 0; k < n - 1; ++k) {
    if (enc.matrix.at(slot, k).is_zero()) continue;
    if (!out.empty()) out += " + ";
    // Middle columns carry a_m^slot; a_m^0 = 1 prints as a plain term.
    if (k >= n - t && k <= t - 2 && slot > 0) {
      out += "a_" + std::to_string(k - n + t + 1);
      if (slot > 1) out += "^" + std::to_string(slot);
      out += " ";
    }
    out += "v_{" + std::to_string(file) + "," + std::to_string(enc.columns[k]) + "}";
  }
  return out;
}

Rational communication_load(const SchemePlan& plan) {
  return make_rational(plan.n() - plan.t(), plan.n());
}

}  // namespace cdc::scheme
