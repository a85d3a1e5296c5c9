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

#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "cdc/error.hpp"
#include "cdc/finite_field.hpp"

using cdc::ff::FieldElement;
using cdc::ff::FieldMatrix;
using cdc::ff::FieldSpec;

namespace {

FieldSpec gf8() { return FieldSpec::make(3, 0b1011); }  // x^3 + x + 1
FieldElement e(const FieldSpec& f, std::uint32_t v) { return {f, v}; }

// Reducible polynomials of degree `deg`: every product of two polynomials of
// degree >= 1 (carry-less, no reduction).
std::set<std::uint32_t> reducible_of_degree(unsigned deg) {
  auto clmul = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t acc = 0;
    for (int i = 0; b >> i; ++i) {
      if ((b >> i) & 1u) acc ^= a << i;
    }
    return acc;
  };
  std::set<std::uint32_t> out;
  for (unsigned da = 1; da < deg; ++da) {
    for (std::uint32_t a = 1u << da; a < (2u << da); ++a) {
      const unsigned db = deg - da;
      for (std::uint32_t b = 1u << db; b < (2u << db); ++b) out.insert(clmul(a, b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("addition is XOR") {
  const auto f = gf8();
  CHECK(cdc::ff::add(e(f, 5), e(f, 3)) == e(f, 6));
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK((e(f, a) + e(f, a)).is_zero());
    CHECK(e(f, a) + FieldElement::zero(f) == e(f, a));
  }
}

TEST_CASE("multiplication examples in GF(8) with x^3+x+1") {
  const auto f = gf8();
  CHECK(cdc::ff::mul(e(f, 2), e(f, 3)) == e(f, 6));
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(e(f, a) * FieldElement::one(f) == e(f, a));
    CHECK((e(f, a) * FieldElement::zero(f)).is_zero());
  }
  CHECK(cdc::ff::pow(e(f, 2), 3) == e(f, 3));
  CHECK(cdc::ff::pow(e(f, 6), 0) == FieldElement::one(f));
  CHECK(cdc::ff::pow(e(f, 6), 1) == e(f, 6));
}

TEST_CASE("inverse matches exhaustive search") {
  const auto f = gf8();
  CHECK(cdc::ff::inverse(FieldElement::one(f)) == FieldElement::one(f));
  for (std::uint32_t a = 1; a < 8; ++a) {
    std::uint32_t found = 0;
    for (std::uint32_t b = 1; b < 8; ++b) {
      if ((e(f, a) * e(f, b)).value() == 1) found = b;
    }
    CHECK(cdc::ff::inverse(e(f, a)).value() == found);
  }
  CHECK(cdc::ff::inverse(e(f, 2)) == e(f, 5));
  CHECK_THROWS_AS(cdc::ff::inverse(FieldElement::zero(f)), cdc::DivisionByZeroError);
}

TEST_CASE("mixing fields is rejected") {
  const auto a = e(gf8(), 3);
  const auto b = e(FieldSpec::gf256(), 3);
  CHECK_THROWS_AS(cdc::ff::add(a, b), cdc::SpecMismatchError);
  CHECK_THROWS_AS(cdc::ff::mul(a, b), cdc::SpecMismatchError);
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(FieldSpec::make(3, 0b1001), cdc::ParameterError);  // x^3+1 = (x+1)(x^2+x+1)
  CHECK_THROWS_AS(FieldSpec::make(0, 1), cdc::ParameterError);
  CHECK_THROWS_AS(FieldSpec::make(17, 0x2002D), cdc::ParameterError);
  CHECK_THROWS_AS(FieldElement(gf8(), 8), cdc::ParameterError);
  CHECK(FieldSpec::gf256().reduction_poly() == 0x11B);
  for (unsigned w = 1; w <= 16; ++w) CHECK_NOTHROW(FieldSpec::standard(w));
}

TEST_CASE("irreducibility agrees with product enumeration up to degree 9") {
  for (unsigned deg = 2; deg <= 9; ++deg) {
    const auto reducible = reducible_of_degree(deg);
    for (std::uint32_t p = 1u << deg; p < (2u << deg); ++p) {
      CHECK(cdc::ff::is_irreducible(p, deg) == (reducible.count(p) == 0));
    }
  }
}

TEST_CASE("field axioms hold exhaustively for T <= 4") {
  for (unsigned w = 1; w <= 4; ++w) {
    const auto f = FieldSpec::standard(w);
    const std::uint32_t q = f.order();
    for (std::uint32_t a = 0; a < q; ++a) {
      if (a != 0) CHECK((e(f, a) * cdc::ff::inverse(e(f, a))).value() == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(e(f, a) * e(f, b) == e(f, b) * e(f, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto x = e(f, a), y = e(f, b), z = e(f, c);
          REQUIRE((x * y) * z == x * (y * z));
          REQUIRE(x * (y + z) == x * y + x * z);
          REQUIRE((x + y) + z == x + (y + z));
        }
      }
    }
  }
}

TEST_CASE("solve_linear_system examples") {
  const auto f = gf8();
  SUBCASE("identity") {
    const std::vector<FieldElement> v{e(f, 4), e(f, 0), e(f, 7)};
    CHECK(cdc::ff::solve_linear_system(FieldMatrix::identity(f, 3), v) == v);
  }
  SUBCASE("upper unitriangular all-ones") {
    FieldMatrix m(f, 3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = r; c < 3; ++c) m.set(r, c, FieldElement::one(f));
    }
    const std::vector<FieldElement> rhs{e(f, 6), e(f, 5), e(f, 3)};
    const auto x = cdc::ff::solve_linear_system(m, rhs);
    CHECK(x == std::vector<FieldElement>{e(f, 3), e(f, 6), e(f, 3)});
    CHECK(m.multiply(x) == rhs);
  }
  SUBCASE("equal rows are singular") {
    FieldMatrix m(f, 2, 2);
    for (int r = 0; r < 2; ++r) {
      m.set(r, 0, e(f, 3));
      m.set(r, 1, e(f, 5));
    }
    try {
      cdc::ff::solve_linear_system(m, std::vector<FieldElement>{e(f, 1), e(f, 2)});
      FAIL("expected a singular-matrix error");
    } catch (const cdc::SingularMatrixError& err) {
      CHECK(err.rank() == 1);
    }
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(cdc::ff::solve_linear_system(FieldMatrix(f, 2, 3), std::vector<FieldElement>(2, e(f, 0))),
                    cdc::ParameterError);
  }
}

TEST_CASE("random nonsingular systems round-trip up to dimension 32") {
  const auto f = FieldSpec::gf256();
  std::mt19937_64 rng(20261016);
  for (std::size_t dim = 1; dim <= 32; ++dim) {
    for (int trial = 0; trial < 3; ++trial) {
      FieldMatrix m(f, dim, dim);
      do {
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) m.set(r, c, e(f, rng() & 0xFF));
        }
      } while (cdc::ff::rank(m) < dim);
      std::vector<FieldElement> rhs;
      for (std::size_t i = 0; i < dim; ++i) rhs.push_back(e(f, rng() & 0xFF));
      const auto x = cdc::ff::solve_linear_system(m, rhs);
      REQUIRE(m.multiply(x) == rhs);
    }
  }
}

TEST_CASE("distinct_coefficients") {
  const auto f = gf8();
  CHECK(cdc::ff::distinct_coefficients(1, f) == std::vector<FieldElement>{e(f, 1)});
  CHECK(cdc::ff::distinct_coefficients(3, f) == std::vector<FieldElement>{e(f, 1), e(f, 2), e(f, 3)});
  CHECK(cdc::ff::distinct_coefficients(7, f).size() == 7);
  CHECK_THROWS_AS(cdc::ff::distinct_coefficients(8, f), cdc::FieldTooSmallError);
}

TEST_CASE("Vandermonde matrices from distinct coefficients are nonsingular") {
  for (unsigned w : {2u, 3u, 4u, 8u}) {
    const auto f = FieldSpec::standard(w);
    const std::size_t max = std::min<std::size_t>(f.order() - 1, 20);
    for (std::size_t count = 1; count <= max; ++count) {
      const auto nodes = cdc::ff::distinct_coefficients(count, f);
      CHECK(cdc::ff::rank(cdc::ff::vandermonde(nodes, count)) == count);
    }
  }
}

TEST_CASE("solve_vandermonde agrees with Gaussian elimination") {
  const auto f = FieldSpec::gf256();
  std::mt19937_64 rng(7);
  for (std::size_t d = 1; d <= 16; ++d) {
    std::vector<FieldElement> nodes;
    std::set<std::uint32_t> used;
    while (nodes.size() < d) {
      const std::uint32_t v = rng() & 0xFF;
      if (v != 0 && used.insert(v).second) nodes.emplace_back(f, v);
    }
    std::vector<FieldElement> rhs;
    for (std::size_t i = 0; i < d; ++i) rhs.emplace_back(f, rng() & 0xFF);
    const auto fast = cdc::ff::solve_vandermonde(nodes, rhs);
    const auto slow = cdc::ff::solve_linear_system(cdc::ff::vandermonde(nodes, d), rhs);
    REQUIRE(fast == slow);
  }
  const std::vector<FieldElement> dup{e(f, 3), e(f, 3)};
  CHECK_THROWS_AS(cdc::ff::solve_vandermonde(dup, dup), cdc::SingularMatrixError);
}
