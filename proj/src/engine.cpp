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

#include "cdc/engine.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <span>

#include <sodium.h>

#include "cdc/decoder.hpp"
#include "cdc/parallel.hpp"

namespace cdc::engine {
namespace {

void ensure_sodium() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) throw Error("libsodium initialization failed");
  });
}

void put_le(std::vector<unsigned char>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

}  // namespace

World make_world(scheme::SchemePlan plan, std::vector<Bytes> files, std::uint64_t seed) {
  if (static_cast<int>(files.size()) != plan.n()) {
    throw ParameterError("world needs exactly n = " + std::to_string(plan.n()) + " files");
  }
  for (const auto& f : files) {
    if (f.empty() || f.size() != files.front().size()) {
      throw ParameterError("files must be non-empty and of equal length");
    }
  }
  return World{std::move(plan), std::move(files), seed};
}

World make_world(scheme::SchemePlan plan, std::uint64_t seed, std::size_t file_bits) {
  if (file_bits < 8 || file_bits % 8 != 0) {
    throw ParameterError("file size must be a positive multiple of 8 bits");
  }
  std::mt19937_64 rng(seed);
  std::vector<Bytes> files(plan.n(), Bytes(file_bits / 8));
  for (auto& f : files) {
    for (auto& byte : f) byte = static_cast<std::uint8_t>(rng());
  }
  return make_world(std::move(plan), std::move(files), seed);
}

ff::FieldElement map_value(const World& world, int q, int x) {
  ensure_sodium();
  std::array<unsigned char, crypto_shorthash_KEYBYTES> key{};
  for (int i = 0; i < 8; ++i) key[i] = static_cast<unsigned char>(world.seed >> (8 * i));
  std::vector<unsigned char> msg;
  put_le(msg, static_cast<std::uint32_t>(q), 4);
  put_le(msg, static_cast<std::uint32_t>(x), 4);
  const Bytes& file = world.files.at(x);
  msg.insert(msg.end(), file.begin(), file.end());

  std::array<unsigned char, crypto_shorthash_BYTES> digest{};
  crypto_shorthash(digest.data(), msg.data(), msg.size(), key.data());
  std::uint64_t word = 0;
  for (int i = 0; i < 8; ++i) word |= static_cast<std::uint64_t>(digest[i]) << (8 * i);
  const ff::FieldSpec& field = world.plan.field();
  return {field, static_cast<std::uint32_t>(word & (field.order() - 1))};
}

ff::FieldElement reduce_values(const ff::FieldSpec& field,
                               const std::vector<ff::FieldElement>& values) {
  ff::FieldElement acc = ff::FieldElement::zero(field);
  for (const auto& v : values) acc += v;
  return acc;
}

std::uint64_t ShuffleTranscript::total_bits() const {
  std::uint64_t total = 0;
  for (auto b : bits_sent_per_node) total += b;
  return total;
}

DecodeFailure::DecodeFailure(int node, int file, const std::string& cause)
    : Error("decode failed at node " + std::to_string(node) + ", group " + std::to_string(file) +
            ": " + cause),
      node_(node),
      file_(file) {}

NodeStates run_map_phase(const World& world) {
  const scheme::SchemePlan& plan = world.plan;
  NodeStates states(plan.n());
  parallel_for(states.size(), [&](std::size_t c) {
    NodeState& s = states[c];
    s.node_id = static_cast<int>(c);
    s.stored_files = plan.placement(s.node_id);
    for (int q = 0; q < plan.functions(); ++q) {
      for (int x : s.stored_files) s.computed_ivs.emplace(scheme::IVKey{q, x}, map_value(world, q, x));
    }
  });
  return states;
}

ShuffleTranscript run_shuffle_phase(const NodeStates& states, const scheme::SchemePlan& plan) {
  std::vector<std::vector<scheme::CodedSignal>> per_node(states.size());
  parallel_for(states.size(), [&](std::size_t c) {
    per_node[c] = scheme::encode_signals(plan, states[c].node_id, states[c].computed_ivs);
  });
  ShuffleTranscript transcript;
  transcript.bits_sent_per_node.assign(states.size(), 0);
  for (std::size_t c = 0; c < per_node.size(); ++c) {
    for (auto& s : per_node[c]) {
      transcript.bits_sent_per_node[c] += plan.field().width();
      transcript.signals.push_back(std::move(s));
    }
  }
  return transcript;
}

NodeStates run_reduce_phase(NodeStates states, const ShuffleTranscript& transcript,
                            const scheme::SchemePlan& plan) {
  std::vector<std::vector<scheme::CodedSignal>> by_group(plan.n());
  for (const auto& s : transcript.signals) by_group.at(s.file).push_back(s);

  parallel_for(states.size(), [&](std::size_t c) {
    NodeState& node = states[c];
    for (int q : plan.assignment(node.node_id)) {
      try {
        auto decoded = scheme::decode_missing_ivs(plan, node.node_id, q, by_group[q], node.computed_ivs);
        node.received_ivs.merge(decoded);
      } catch (const Error& e) {
        throw DecodeFailure(node.node_id, q, e.what());
      }
      std::vector<ff::FieldElement> values;
      for (int x = 0; x < plan.files(); ++x) {
        const scheme::IVKey key{q, x};
        auto it = node.computed_ivs.find(key);
        if (it == node.computed_ivs.end()) it = node.received_ivs.find(key);
        if (it == node.received_ivs.end()) {
          throw DecodeFailure(node.node_id, q, "v_{" + std::to_string(q) + "," +
                                                   std::to_string(x) + "} unavailable");
        }
        values.push_back(it->second);
      }
      node.reduced_outputs.insert_or_assign(q, reduce_values(plan.field(), values));
    }
  });
  return states;
}

std::vector<OutputCheck> VerificationReport::mismatches() const {
  std::vector<OutputCheck> out;
  for (const auto& c : checks) {
    if (!c.match) out.push_back(c);
  }
  return out;
}

VerificationReport verify_against_oracle(const World& world, const NodeStates& reduced) {
  const scheme::SchemePlan& plan = world.plan;
  std::vector<ff::FieldElement> expected;
  for (int q = 0; q < plan.functions(); ++q) {
    std::vector<ff::FieldElement> values;
    for (int x = 0; x < plan.files(); ++x) values.push_back(map_value(world, q, x));
    expected.push_back(reduce_values(plan.field(), values));
  }

  VerificationReport report;
  report.producers_per_function.assign(plan.functions(), 0);
  bool ok = true;
  for (const auto& node : reduced) {
    for (const auto& [q, value] : node.reduced_outputs) {
      if (q < 0 || q >= plan.functions()) {
        ok = false;
        continue;
      }
      ++report.producers_per_function[q];
    }
    for (int q : plan.assignment(node.node_id)) {
      OutputCheck check;
      check.node = node.node_id;
      check.q = q;
      check.expected = expected[q].value();
      if (auto it = node.reduced_outputs.find(q); it != node.reduced_outputs.end()) {
        check.produced = it->second.value();
        check.match = it->second == expected[q];
      }
      ok = ok && check.match;
      report.checks.push_back(check);
    }
    for (const auto& [q, value] : node.reduced_outputs) {
      const auto& assigned = plan.assignment(node.node_id);
      if (std::find(assigned.begin(), assigned.end(), q) == assigned.end()) ok = false;
    }
  }
  for (int count : report.producers_per_function) ok = ok && count == plan.replication();
  report.passed = ok;
  return report;
}

Rational measured_load(const ShuffleTranscript& transcript, const scheme::SchemePlan& plan) {
  const BigInt denom = BigInt(plan.functions()) * plan.files() * plan.field().width();
  return make_rational(BigInt(transcript.total_bits()), denom);
}

void flip_payload_bit(ShuffleTranscript& transcript, std::size_t index, unsigned bit) {
  if (index >= transcript.signals.size()) throw ParameterError("signal index out of range");
  auto& s = transcript.signals[index];
  const ff::FieldSpec& field = s.payload.spec();
  if (bit >= field.width()) throw ParameterError("bit index beyond the field width");
  s.payload = ff::FieldElement(field, s.payload.value() ^ (1u << bit));
}

SimulationResult simulate(const World& world) {
  NodeStates mapped = run_map_phase(world);
  ShuffleTranscript transcript = run_shuffle_phase(mapped, world.plan);
  NodeStates reduced = run_reduce_phase(std::move(mapped), transcript, world.plan);
  VerificationReport report = verify_against_oracle(world, reduced);
  Rational load = measured_load(transcript, world.plan);
  return {std::move(reduced), std::move(transcript), std::move(report), std::move(load)};
}

}  // namespace cdc::engine
