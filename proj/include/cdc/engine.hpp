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

// Three-phase MapReduce simulation of the scheme over a broadcast bus, with
// exact bit accounting and a centralized correctness oracle.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdc/error.hpp"
#include "cdc/exact.hpp"
#include "cdc/scheme.hpp"

namespace cdc::engine {

using Bytes = std::vector<std::uint8_t>;

struct World {
  scheme::SchemePlan plan;
  std::vector<Bytes> files;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultFileBits = 64;

/// Files filled from a std::mt19937_64 seeded with `seed`. file_bits must be a
/// positive multiple of 8.
World make_world(scheme::SchemePlan plan, std::uint64_t seed,
                 std::size_t file_bits = kDefaultFileBits);

/// Throws ParameterError unless there are n files of one common length >= 1 byte.
World make_world(scheme::SchemePlan plan, std::vector<Bytes> files, std::uint64_t seed);

/// Toy map function g_{q,x}(w_x): SipHash-2-4 keyed by the seed over
/// (q, x, file bytes), truncated to T bits.
ff::FieldElement map_value(const World& world, int q, int x);

/// Toy reducer h_q: XOR of all n values v_{q,0..n-1}.
ff::FieldElement reduce_values(const ff::FieldSpec& field,
                               const std::vector<ff::FieldElement>& values);

struct NodeState {
  int node_id = 0;
  std::vector<int> stored_files;
  scheme::IVMap computed_ivs;
  scheme::IVMap received_ivs;
  std::map<int, ff::FieldElement> reduced_outputs;
};

using NodeStates = std::vector<NodeState>;

struct ShuffleTranscript {
  std::vector<scheme::CodedSignal> signals;
  std::vector<std::uint64_t> bits_sent_per_node;

  std::uint64_t total_bits() const;
};

/// Raised when a node cannot decode a group during the Reduce phase.
class DecodeFailure : public Error {
 public:
  DecodeFailure(int node, int file, const std::string& cause);
  int node() const noexcept { return node_; }
  int file() const noexcept { return file_; }

 private:
  int node_;
  int file_;
};

/// Each node computes v_{q,x} for every q and every stored file x.
NodeStates run_map_phase(const World& world);

/// Every node multicasts its encoded signals, in node order. Only payload
/// bits (T per signal) are counted.
ShuffleTranscript run_shuffle_phase(const NodeStates& states, const scheme::SchemePlan& plan);

/// Each node decodes its missing values for every assigned function and
/// applies the reducer.
NodeStates run_reduce_phase(NodeStates states, const ShuffleTranscript& transcript,
                            const scheme::SchemePlan& plan);

struct OutputCheck {
  int node = 0;
  int q = 0;
  std::uint32_t expected = 0;
  std::optional<std::uint32_t> produced;
  bool match = false;
};

struct VerificationReport {
  std::vector<OutputCheck> checks;
  std::vector<int> producers_per_function;
  bool passed = false;

  std::vector<OutputCheck> mismatches() const;
};

VerificationReport verify_against_oracle(const World& world, const NodeStates& reduced);

/// total bits / (Q * N * T).
Rational measured_load(const ShuffleTranscript& transcript, const scheme::SchemePlan& plan);

/// Flips bit `bit` (< T) of the payload of signal `index`.
void flip_payload_bit(ShuffleTranscript& transcript, std::size_t index, unsigned bit);

struct SimulationResult {
  NodeStates states;
  ShuffleTranscript transcript;
  VerificationReport report;
  Rational load;
};

SimulationResult simulate(const World& world);

}  // namespace cdc::engine
