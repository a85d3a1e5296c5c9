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

#include "cdc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cdc/error.hpp"

namespace cdc {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

double log_binomial_approx(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) throw ParameterError("log_binomial_approx out of range");
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

double log10_of(const BigInt& x) {
  if (x <= 0) throw ParameterError("log10 of a non-positive integer");
  const std::string digits = x.str();
  const std::size_t lead = std::min<std::size_t>(digits.size(), 17);
  const double mantissa = std::stod(digits.substr(0, lead));
  return std::log10(mantissa) + static_cast<double>(digits.size() - lead);
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& q, int significant) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float value = Float(boost::multiprecision::numerator(q)) /
                      Float(boost::multiprecision::denominator(q));
  std::ostringstream out;
  out.precision(significant);
  out << value;
  return out.str();
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  return Rational(num, den);
}

}  // namespace cdc
