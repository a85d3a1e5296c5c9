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

// Block designs: the cyclic 1-design the scheme is built on, plus an
// exhaustive t-design verifier.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/exact.hpp"

namespace cdc::designs {

using Block = std::vector<int>;

/// Point set [0, n) with an ordered list of equal-size blocks. Each block is
/// stored sorted ascending; its index in `blocks` is the block id.
struct Design {
  int n_points = 0;
  int block_size = 0;
  std::vector<Block> blocks;

  friend bool operator==(const Design&, const Design&) = default;
};

/// Validates and normalizes (sorts) the blocks. Throws ParameterError on an
/// empty block list, unequal block sizes, repeated points or points outside
/// [0, n).
Design make_design(int n_points, std::vector<Block> blocks);

/// n blocks, block i = {i, i+1, ..., i+t-1} mod n. Requires 1 <= t < n.
Design cyclic_blocks(int n, int t);

/// Membership in cyclic block `block` without building the design:
/// point lies in block iff (point - block) mod n < t.
bool cyclic_contains(int n, int t, int block, int point);

struct Witness {
  std::vector<int> first;
  std::int64_t first_count = 0;
  std::vector<int> second;
  std::int64_t second_count = 0;
};

struct DesignVerdict {
  bool is_t_design = false;
  int t = 0;
  std::optional<std::int64_t> lambda;
  std::optional<Witness> counterexample;
};

inline constexpr std::int64_t kMaxSubsets = 10'000'000;

/// Counts, for every t-subset of points, the blocks containing it. The witness
/// pairs the lexicographically first t-subset with the first one whose count
/// differs. Throws ParameterError if t < 1, t > block_size, or C(n, t) > 10^7.
DesignVerdict verify_t_design(const Design& d, int t);

/// lambda * C(n - t', t - t') / C(k - t', t - t'): the index of a t-design
/// viewed as a t'-design.
Rational derived_lambda(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lambda,
                        std::int64_t t_prime);

/// lambda * C(n, t) / C(k, t).
Rational block_count(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lambda);

}  // namespace cdc::designs
