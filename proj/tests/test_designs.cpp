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

#include <vector>

#include "doctest.h"

#include "cdc/designs.hpp"
#include "cdc/error.hpp"

using namespace cdc::designs;

TEST_CASE("cyclic_blocks reproduces the six-node example") {
  const Design d = cyclic_blocks(6, 4);
  const std::vector<Block> expected = {{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5},
                                       {0, 3, 4, 5}, {0, 1, 4, 5}, {0, 1, 2, 5}};
  CHECK(d.blocks == expected);
  CHECK(d.n_points == 6);
  CHECK(d.block_size == 4);
}

TEST_CASE("cyclic_blocks(5, 3) follows the index formula") {
  const std::vector<Block> expected = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}};
  CHECK(cyclic_blocks(5, 3).blocks == expected);
}

TEST_CASE("cyclic_blocks parameter errors") {
  CHECK_THROWS_AS(cyclic_blocks(3, 3), cdc::ParameterError);
  CHECK_THROWS_AS(cyclic_blocks(3, 0), cdc::ParameterError);
}

TEST_CASE("closed-form membership agrees with the construction") {
  for (int n = 2; n <= 20; ++n) {
    for (int t = 1; t < n; ++t) {
      const Design d = cyclic_blocks(n, t);
      for (int b = 0; b < n; ++b) {
        for (int p = 0; p < n; ++p) {
          const bool in = std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), p);
          REQUIRE(in == cyclic_contains(n, t, b, p));
        }
      }
    }
  }
}

TEST_CASE("verify_t_design verdicts") {
  SUBCASE("cyclic (6,4) is a 1-(6,4,4) design") {
    const auto v = verify_t_design(cyclic_blocks(6, 4), 1);
    CHECK(v.is_t_design);
    CHECK(v.lambda == 4);
    CHECK_FALSE(v.counterexample.has_value());
  }
  SUBCASE("cyclic (5,3) is not a 2-design") {
    const auto v = verify_t_design(cyclic_blocks(5, 3), 2);
    CHECK_FALSE(v.is_t_design);
    CHECK_FALSE(v.lambda.has_value());
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->first == std::vector<int>{0, 1});
    CHECK(v.counterexample->first_count == 2);
    CHECK(v.counterexample->second == std::vector<int>{0, 2});
    CHECK(v.counterexample->second_count == 1);
  }
  SUBCASE("the paper's printed block list is not a 2-design either") {
    const auto d = make_design(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 2}});
    const auto v = verify_t_design(d, 2);
    CHECK_FALSE(v.is_t_design);
    CHECK(v.counterexample->first_count == 1);
    CHECK(v.counterexample->second_count == 2);
  }
  SUBCASE("single block") {
    const auto v = verify_t_design(make_design(2, {{0, 1}}), 1);
    CHECK(v.is_t_design);
    CHECK(v.lambda == 1);
  }
  SUBCASE("Fano plane is a 2-(7,3,1) design") {
    const auto fano = make_design(
        7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}});
    const auto v2 = verify_t_design(fano, 2);
    CHECK(v2.is_t_design);
    CHECK(v2.lambda == 1);
    // Monotonicity: a 2-design is a 1-design with the derived index.
    const auto v1 = verify_t_design(fano, 1);
    CHECK(v1.is_t_design);
    CHECK(cdc::Rational(*v1.lambda) == derived_lambda(7, 3, 2, 1, 1));
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(verify_t_design(cyclic_blocks(6, 4), 5), cdc::ParameterError);
    CHECK_THROWS_AS(verify_t_design(cyclic_blocks(6, 4), 0), cdc::ParameterError);
    CHECK_THROWS_AS(verify_t_design(cyclic_blocks(60, 30), 12), cdc::ParameterError);
  }
}

TEST_CASE("cyclic designs are 1-(n,t,t) designs") {
  for (int n = 2; n <= 30; ++n) {
    for (int t = 1; t < n; ++t) {
      const auto v = verify_t_design(cyclic_blocks(n, t), 1);
      REQUIRE(v.is_t_design);
      CHECK(v.lambda == t);
      CHECK(block_count(n, t, 1, t) == n);
    }
  }
}

TEST_CASE("derived_lambda and block_count") {
  CHECK(derived_lambda(9, 4, 2, 3, 2) == 3);
  CHECK(derived_lambda(7, 3, 2, 1, 1) == 3);
  CHECK(derived_lambda(6, 4, 1, 4, 1) == 4);
  CHECK(block_count(6, 4, 1, 4) == 6);
  CHECK(block_count(7, 3, 2, 1) == 7);
  CHECK(block_count(5, 5, 3, 1) == 1);
  CHECK_THROWS_AS(make_design(3, {{0, 1}, {2}}), cdc::ParameterError);
  CHECK_THROWS_AS(make_design(3, {{0, 3}}), cdc::ParameterError);
  CHECK_THROWS_AS(make_design(3, {{1, 1}}), cdc::ParameterError);
}
