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

#include "cdc/designs.hpp"

#include <algorithm>
#include <string>

#include "cdc/error.hpp"

namespace cdc::designs {

Design make_design(int n_points, std::vector<Block> blocks) {
  if (n_points < 1) throw ParameterError("design needs at least one point");
  if (blocks.empty()) throw ParameterError("design needs at least one block");
  const std::size_t k = blocks.front().size();
  for (auto& b : blocks) {
    if (b.size() != k) throw ParameterError("blocks must all have the same size");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw ParameterError("block contains a repeated point");
    }
    if (!b.empty() && (b.front() < 0 || b.back() >= n_points)) {
      throw ParameterError("block point outside [0, " + std::to_string(n_points - 1) + "]");
    }
  }
  return Design{n_points, static_cast<int>(k), std::move(blocks)};
}

Design cyclic_blocks(int n, int t) {
  if (t < 1 || t >= n) {
    throw ParameterError("cyclic design requires 1 <= t < n, got n = " + std::to_string(n) +
                         ", t = " + std::to_string(t));
  }
  std::vector<Block> blocks(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < t; ++j) blocks[i].push_back((i + j) % n);
  }
  return make_design(n, std::move(blocks));
}

bool cyclic_contains(int n, int t, int block, int point) {
  return ((point - block) % n + n) % n < t;
}

DesignVerdict verify_t_design(const Design& d, int t) {
  if (t < 1 || t > d.block_size) {
    throw ParameterError("t must lie in [1, block size = " + std::to_string(d.block_size) + "]");
  }
  if (binomial(d.n_points, t) > kMaxSubsets) {
    throw ParameterError("C(" + std::to_string(d.n_points) + ", " + std::to_string(t) +
                         ") t-subsets exceed the verification limit");
  }

  std::vector<std::vector<char>> member(d.blocks.size(), std::vector<char>(d.n_points, 0));
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (int p : d.blocks[b]) member[b][p] = 1;
  }

  auto coverage = [&](const std::vector<int>& subset) {
    std::int64_t count = 0;
    for (const auto& row : member) {
      count += std::all_of(subset.begin(), subset.end(), [&](int p) { return row[p] != 0; });
    }
    return count;
  };

  DesignVerdict verdict;
  verdict.t = t;
  std::vector<int> subset(t);
  for (int i = 0; i < t; ++i) subset[i] = i;
  const std::vector<int> first = subset;
  const std::int64_t first_count = coverage(first);

  while (true) {
    const std::int64_t c = coverage(subset);
    if (c != first_count) {
      verdict.counterexample = Witness{first, first_count, subset, c};
      return verdict;
    }
    // Advance to the next t-subset in lexicographic order.
    int i = t - 1;
    while (i >= 0 && subset[i] == d.n_points - t + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < t; ++j) subset[j] = subset[j - 1] + 1;
  }
  verdict.is_t_design = true;
  verdict.lambda = first_count;
  return verdict;
}

Rational derived_lambda(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lambda,
                        std::int64_t t_prime) {
  if (t_prime > t || t_prime < 0) throw ParameterError("derived_lambda requires 0 <= t' <= t");
  return make_rational(lambda * binomial(n - t_prime, t - t_prime),
                       binomial(k - t_prime, t - t_prime));
}

Rational block_count(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lambda) {
  if (!(t <= k && k <= n)) throw ParameterError("block_count requires t <= k <= n");
  return make_rational(lambda * binomial(n, t), binomial(k, t));
}

}  // namespace cdc::designs
