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

#include <cmath>

#include "doctest.h"

#include "cdc/exact.hpp"

using cdc::BigInt;
using cdc::Rational;

TEST_CASE("binomial") {
  CHECK(cdc::binomial(13, 9) == 715);
  CHECK(cdc::binomial(23, 16) == 245157);
  CHECK(cdc::binomial(5, -1) == 0);
  CHECK(cdc::binomial(5, 6) == 0);
  CHECK(cdc::binomial(0, 0) == 1);
  // Pascal's rule on a row whose values overflow 64 bits.
  for (int k = 1; k < 200; ++k) {
    REQUIRE(cdc::binomial(200, k) == cdc::binomial(199, k - 1) + cdc::binomial(199, k));
  }
}

TEST_CASE("rendering") {
  CHECK(cdc::to_string(Rational(2, 6)) == "1/3");
  CHECK(cdc::to_string(Rational(4, 2)) == "2");
  CHECK(cdc::to_decimal(Rational(1, 3)) == "0.333333333333");
  CHECK(cdc::to_decimal(Rational(22, 75)) == "0.293333333333");
  CHECK(cdc::to_decimal(Rational(0)) == "0");
}

TEST_CASE("logarithms") {
  CHECK(cdc::log10_of(BigInt(1000)) == doctest::Approx(3.0));
  CHECK(cdc::log10_of(cdc::binomial(23, 16)) == doctest::Approx(std::log10(245157.0)));
  const double exact = cdc::log10_of(cdc::binomial(2458, 2401));
  CHECK(cdc::log_binomial_approx(2458, 2401) / std::log(10.0) == doctest::Approx(exact).epsilon(1e-9));
}
