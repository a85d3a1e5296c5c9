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

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "cdc/decoder.hpp"
#include "cdc/error.hpp"
#include "cdc/scheme.hpp"

using namespace cdc::scheme;
using cdc::ff::FieldElement;
using cdc::ff::FieldSpec;

namespace {

// Every v_{q,x} of the system, drawn uniformly.
IVMap random_ivs(const SchemePlan& plan, std::mt19937_64& rng) {
  IVMap all;
  for (int q = 0; q < plan.n(); ++q) {
    for (int x = 0; x < plan.n(); ++x) {
      all.emplace(IVKey{q, x}, FieldElement(plan.field(), rng() & (plan.field().order() - 1)));
    }
  }
  return all;
}

IVMap local_view(const SchemePlan& plan, int node, const IVMap& all) {
  IVMap out;
  for (const auto& [key, value] : all) {
    if (plan.stores(node, key.x)) out.emplace(key, value);
  }
  return out;
}

std::vector<CodedSignal> all_signals(const SchemePlan& plan, const IVMap& all) {
  std::vector<CodedSignal> out;
  for (int c = 0; c < plan.n(); ++c) {
    for (auto& s : encode_signals(plan, c, local_view(plan, c, all))) out.push_back(s);
  }
  return out;
}

std::vector<std::pair<int, int>> admissible_pairs(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int t = 1; t < n; ++t) {
      if (3 * t >= 2 * n) out.emplace_back(n, t);
    }
  }
  return out;
}

// det of a 2x2 matrix: ad + bc in characteristic 2.
FieldElement det2(const cdc::ff::FieldMatrix& m) {
  return m.at(0, 0) * m.at(1, 1) + m.at(0, 1) * m.at(1, 0);
}

}  // namespace

TEST_CASE("build_scheme on the six-node example") {
  const auto plan = build_scheme(6, 4, FieldSpec::gf256());
  CHECK(plan.computation_load() == 4);
  CHECK(plan.replication() == 4);
  CHECK(plan.nodes() == 6);
  const std::vector<std::vector<int>> blocks = {{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5},
                                                {0, 3, 4, 5}, {0, 1, 4, 5}, {0, 1, 2, 5}};
  for (int c = 0; c < 6; ++c) {
    CHECK(plan.placement(c) == blocks[c]);
    CHECK(plan.assignment(c) == blocks[c]);
  }
  CHECK(plan.coeffs().size() == 2);
  CHECK(plan.coeffs()[0].value() == 1);
  CHECK(communication_load(plan) == cdc::Rational(1, 3));
}

TEST_CASE("build_scheme parameter errors name the inequality") {
  try {
    build_scheme(5, 3, FieldSpec::gf256());
    FAIL("expected a parameter error");
  } catch (const cdc::ParameterError& e) {
    CHECK(std::string(e.what()).find("3t ≥ 2n violated") != std::string::npos);
  }
  CHECK_THROWS_AS(build_scheme(4, 4, FieldSpec::gf256()), cdc::ParameterError);
  // 2t - n + 1 = 5 > 2^2.
  try {
    build_scheme(8, 6, FieldSpec::standard(2));
    FAIL("expected a parameter error");
  } catch (const cdc::ParameterError& e) {
    CHECK(std::string(e.what()).find("2^T") != std::string::npos);
  }
}

TEST_CASE("smallest admissible plan (3, 2) over GF(4)") {
  const auto plan = build_scheme(3, 2, FieldSpec::standard(2));
  CHECK(plan.coeffs().size() == 1);
  CHECK(plan.encoder(2).matrix.rows() == 1);
  CHECK(plan.encoder(2).matrix.cols() == 2);
  CHECK(communication_load(plan) == cdc::Rational(1, 3));
  std::mt19937_64 rng(1);
  const IVMap all = random_ivs(plan, rng);
  const auto sig = encode_signals(plan, 0, local_view(plan, 0, all));
  REQUIRE(sig.size() == 1);
  CHECK(sig[0].file == 2);
  CHECK(sig[0].payload == all.at({2, 0}) + all.at({2, 1}));
  CHECK(required_iv_set(plan, 0) == std::vector<IVKey>{{0, 2}, {1, 2}});
}

TEST_CASE("encoder_matrix shapes") {
  const auto f = FieldSpec::gf256();
  SUBCASE("(6,4)") {
    const auto coeffs = cdc::ff::distinct_coefficients(2, f);
    const auto m = encoder_matrix(6, 4, coeffs);
    const FieldElement a1 = coeffs[1], one = FieldElement::one(f), zero = FieldElement::zero(f);
    const std::vector<std::vector<FieldElement>> expected = {{one, one, one, one, zero},
                                                             {zero, one, a1, one, one}};
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 5);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 5; ++c) CHECK(m.at(r, c) == expected[r][c]);
    }
  }
  SUBCASE("(3,2)") {
    const auto m = encoder_matrix(3, 2, cdc::ff::distinct_coefficients(1, f));
    CHECK(m.at(0, 0).value() == 1);
    CHECK(m.at(0, 1).value() == 1);
  }
  SUBCASE("(8,6): every receiver's 2x2 system has nonzero determinant") {
    const auto plan = build_scheme(8, 6, f);
    int receivers = 0;
    for (int c = 0; c < 8; ++c) {
      if (!plan.stores(c, 7)) continue;
      ++receivers;
      CHECK_FALSE(det2(receiver_matrix(plan, c, 7)).is_zero());
    }
    CHECK(receivers == 6);
  }
  SUBCASE("wrong coefficient count") {
    CHECK_THROWS_AS(encoder_matrix(6, 4, cdc::ff::distinct_coefficients(3, f)), cdc::ParameterError);
  }
}

TEST_CASE("row j of the canonical encoder") {
  // Zero outside [j, j+t-1]; the middle columns carry a_m^j.
  for (auto [n, t] : admissible_pairs(16)) {
    const auto plan = build_scheme(n, t, FieldSpec::gf256());
    const auto& m = plan.encoder(n - 1).matrix;
    for (int j = 0; j < n - t; ++j) {
      for (int k = 0; k < n - 1; ++k) {
        const std::uint32_t v = m.at(j, k).value();
        if (k < j || k > j + t - 1) {
          REQUIRE(v == 0);
        } else if (k <= n - t - 1 || k >= t - 1) {
          REQUIRE(v == 1);
        } else {
          REQUIRE(m.at(j, k) == cdc::ff::pow(plan.coeffs()[k - n + t + 1], j));
        }
      }
    }
  }
}

TEST_CASE("signal formulas reproduce the six-node coded signal table") {
  const auto plan = build_scheme(6, 4, FieldSpec::gf256());
  std::map<int, std::vector<std::string>> by_sender;
  for (int i = 0; i < 6; ++i) {
    const auto& enc = plan.encoder(i);
    for (int j = 0; j < 2; ++j) by_sender[enc.senders[j]].push_back(signal_formula(plan, i, j));
  }
  const std::map<int, std::set<std::string>> table = {
      {0, {"v_{4,0} + a_1 v_{4,1} + v_{4,2} + v_{4,3}", "v_{5,0} + v_{5,1} + v_{5,2} + v_{5,3}"}},
      {1, {"v_{5,1} + a_1 v_{5,2} + v_{5,3} + v_{5,4}", "v_{0,1} + v_{0,2} + v_{0,3} + v_{0,4}"}},
      {2, {"v_{0,2} + a_1 v_{0,3} + v_{0,4} + v_{0,5}", "v_{1,2} + v_{1,3} + v_{1,4} + v_{1,5}"}},
      {3, {"v_{1,3} + a_1 v_{1,4} + v_{1,5} + v_{1,0}", "v_{2,3} + v_{2,4} + v_{2,5} + v_{2,0}"}},
      {4, {"v_{2,4} + a_1 v_{2,5} + v_{2,0} + v_{2,1}", "v_{3,4} + v_{3,5} + v_{3,0} + v_{3,1}"}},
      {5, {"v_{3,5} + a_1 v_{3,0} + v_{3,1} + v_{3,2}", "v_{4,5} + v_{4,0} + v_{4,1} + v_{4,2}"}},
  };
  for (const auto& [sender, formulas] : table) {
    CHECK(std::set<std::string>(by_sender[sender].begin(), by_sender[sender].end()) == formulas);
  }
}

TEST_CASE("required_iv_set") {
  const auto plan = build_scheme(6, 4, FieldSpec::gf256());
  const auto keys = required_iv_set(plan, 2);
  REQUIRE(keys.size() == 8);
  for (const auto& k : keys) {
    CHECK((k.q >= 2 && k.q <= 5));
    CHECK((k.x == 0 || k.x == 1));
  }
  for (auto [n, t] : admissible_pairs(14)) {
    const auto p = build_scheme(n, t, FieldSpec::gf256());
    for (int c = 0; c < n; ++c) REQUIRE(required_iv_set(p, c).size() == static_cast<std::size_t>(t * (n - t)));
  }
}

TEST_CASE("placement and assignment symmetry") {
  for (auto [n, t] : admissible_pairs(24)) {
    const auto plan = build_scheme(n, t, FieldSpec::gf256());
    for (int x = 0; x < n; ++x) {
      REQUIRE(plan.file_holders(x).size() == static_cast<std::size_t>(t));
      REQUIRE(plan.function_nodes(x).size() == static_cast<std::size_t>(t));
      const auto& enc = plan.encoder(x);
      REQUIRE(enc.senders.size() == static_cast<std::size_t>(n - t));
      for (int s : enc.senders) REQUIRE_FALSE(plan.stores(s, x));
      for (int col : enc.columns) REQUIRE(col != x);
    }
  }
}

TEST_CASE("encode_signals on the six-node example") {
  const auto plan = build_scheme(6, 4, FieldSpec::gf256());
  std::mt19937_64 rng(3);
  const IVMap all = random_ivs(plan, rng);
  const auto sig = encode_signals(plan, 0, local_view(plan, 0, all));
  REQUIRE(sig.size() == 2);
  CHECK(sig[1].file == 5);
  CHECK(sig[1].payload == all.at({5, 0}) + all.at({5, 1}) + all.at({5, 2}) + all.at({5, 3}));
  const FieldElement a1 = plan.coeffs()[1];
  const auto sig1 = encode_signals(plan, 1, local_view(plan, 1, all));
  CHECK(sig1[1].file == 5);
  CHECK(sig1[1].payload ==
        all.at({5, 1}) + a1 * all.at({5, 2}) + all.at({5, 3}) + all.at({5, 4}));

  IVMap zeros;
  for (const auto& [k, v] : local_view(plan, 3, all)) zeros.emplace(k, FieldElement::zero(plan.field()));
  for (const auto& s : encode_signals(plan, 3, zeros)) CHECK(s.payload.is_zero());

  IVMap partial = local_view(plan, 0, all);
  partial.erase({5, 2});
  CHECK_THROWS_AS(encode_signals(plan, 0, partial), cdc::IncompleteMapPhaseError);
}

TEST_CASE("decode on the six-node example") {
  const auto plan = build_scheme(6, 4, FieldSpec::gf256());
  std::mt19937_64 rng(11);
  const IVMap all = random_ivs(plan, rng);
  const auto signals = all_signals(plan, all);

  const auto at_b2 = decode_missing_ivs(plan, 2, 5, signals, local_view(plan, 2, all));
  CHECK(at_b2.size() == 2);
  CHECK(at_b2.at({5, 0}) == all.at({5, 0}));
  CHECK(at_b2.at({5, 1}) == all.at({5, 1}));

  const auto at_b5 = decode_missing_ivs(plan, 5, 5, signals, local_view(plan, 5, all));
  CHECK(at_b5.at({5, 3}) == all.at({5, 3}));
  CHECK(at_b5.at({5, 4}) == all.at({5, 4}));

  // Node 0 sends in group 5 and needs nothing from it.
  CHECK_THROWS_AS(decode_missing_ivs(plan, 0, 5, signals, local_view(plan, 0, all)),
                  cdc::DecodePreconditionError);

  std::vector<CodedSignal> missing;
  for (const auto& s : signals) {
    if (!(s.file == 5 && s.slot == 1)) missing.push_back(s);
  }
  CHECK_THROWS_AS(decode_missing_ivs(plan, 2, 5, missing, local_view(plan, 2, all)),
                  cdc::DecodePreconditionError);
}

TEST_CASE("receiver case dispatch") {
  CHECK(classify_receiver(6, 4, 2) == DecodeCase::kUpperTriangular);
  CHECK(classify_receiver(6, 4, 3) == DecodeCase::kVandermonde);
  CHECK(classify_receiver(6, 4, 4) == DecodeCase::kVandermonde);
  CHECK(classify_receiver(6, 4, 5) == DecodeCase::kLowerTriangular);
  CHECK_THROWS_AS(classify_receiver(6, 4, 1), cdc::DecodePreconditionError);
  // (12, 8): m in 4..11; Case 2 = {5, 6}, Case 3 = {7, 8}, Case 4 = {9, 10}.
  CHECK(classify_receiver(12, 8, 5) == DecodeCase::kLeadingBordered);
  CHECK(classify_receiver(12, 8, 6) == DecodeCase::kLeadingBordered);
  CHECK(classify_receiver(12, 8, 8) == DecodeCase::kVandermonde);
  CHECK(classify_receiver(12, 8, 9) == DecodeCase::kTrailingBordered);
  CHECK(classify_receiver(12, 8, 10) == DecodeCase::kTrailingBordered);
  CHECK(classify_receiver(12, 8, 11) == DecodeCase::kLowerTriangular);

  std::set<DecodeCase> seen;
  for (auto [n, t] : admissible_pairs(24)) {
    for (int m = n - t; m < n; ++m) seen.insert(classify_receiver(n, t, m));
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("structural decoder equals the Gaussian oracle and the originals") {
  std::mt19937_64 rng(2026);
  for (auto [n, t] : admissible_pairs(12)) {
    if (n < 3) continue;
    const auto plan = build_scheme(n, t, FieldSpec::gf256());
    const IVMap all = random_ivs(plan, rng);
    const auto signals = all_signals(plan, all);
    for (int c = 0; c < n; ++c) {
      const IVMap local = local_view(plan, c, all);
      for (int i = 0; i < n; ++i) {
        if (!plan.stores(c, i)) continue;
        const auto fast = decode_missing_ivs(plan, c, i, signals, local);
        const auto oracle = decode_missing_ivs_gaussian(plan, c, i, signals, local);
        REQUIRE(fast == oracle);
        REQUIRE(fast.size() == static_cast<std::size_t>(n - t));
        for (const auto& [key, value] : fast) {
          REQUIRE_FALSE(plan.stores(c, key.x));
          REQUIRE(value == all.at(key));
        }
      }
    }
  }
}

TEST_CASE("every receiver system is nonsingular, also over small fields") {
  for (auto [n, t] : admissible_pairs(24)) {
    // Smallest width with 2^T >= 2t - n + 1.
    unsigned w = 1;
    while ((1 << w) < 2 * t - n + 1) ++w;
    for (unsigned width : {w, 8u}) {
      const auto plan = build_scheme(n, t, FieldSpec::standard(width));
      for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) {
          if (plan.stores(c, i)) REQUIRE(cdc::ff::rank(receiver_matrix(plan, c, i)) == static_cast<std::size_t>(n - t));
        }
      }
    }
  }
}
