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

// Exact big-integer and rational helpers shared by the design and load code.

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// ln C(n, k) via lgamma; for sizes where the exact value is impractical.
double log_binomial_approx(std::int64_t n, std::int64_t k);

/// Decimal log of a positive integer, accurate to double precision.
double log10_of(const BigInt& x);

/// "num/den" in lowest terms; integers render without a denominator.
std::string to_string(const Rational& q);

/// Decimal rendering rounded to `significant` significant digits.
std::string to_decimal(const Rational& q, int significant = 12);

Rational make_rational(const BigInt& num, const BigInt& den);

}  // namespace cdc
