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

// Exact evaluation of communication-load formulas for cascaded coded
// distributed computing schemes, and the inequalities behind the asymptotic
// optimality of the cyclic-design scheme.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/exact.hpp"

namespace cdc::metrics {

struct LoadReport {
  std::string scheme_name;
  BigInt K, r, s, N, Q;
  Rational load;
  /// `load` rounded to 12 significant digits.
  std::string load_float;
  /// Non-empty when the row's formula is known to be unreliable.
  std::string note;
};

/// Fills load_float and enforces 0 <= load <= 1 unless `note` flags the row.
LoadReport make_report(std::string scheme_name, BigInt K, BigInt r, BigInt s, BigInt N, BigInt Q,
                       Rational load, std::string note = {});

/// p >= 2, distinct exponents w, v_1..v_c (v_i >= 0) with floor(w/2) >= max v_i;
/// the scheme has K = p^w + y nodes, y = sum p^{v_i}, and r = s = p^w.
class FamilyParams {
 public:
  static FamilyParams make(std::int64_t p, int w, std::vector<int> vs);

  std::int64_t p() const noexcept { return p_; }
  int w() const noexcept { return w_; }
  const std::vector<int>& vs() const noexcept { return vs_; }
  std::int64_t p_pow_w() const noexcept { return p_pow_w_; }
  std::int64_t y() const noexcept { return y_; }

 private:
  FamilyParams() = default;
  std::int64_t p_ = 0;
  int w_ = 0;
  std::vector<int> vs_;
  std::int64_t p_pow_w_ = 0;
  std::int64_t y_ = 0;
};

/// Optimal load of the (K, C(K,r), C(K,s), r, s) scheme:
/// sum over l in [max(r+1, s), min(r+s, K)] of
/// C(K-r, K-l) C(r, l-s) / C(K, s) * (l-r)/(l-1). Zero for an empty range.
Rational li_optimal_load(std::int64_t K, std::int64_t r, std::int64_t s);

/// The same load for r = s, summed over i = l - r:
/// sum_{i>=1} C(K-r, i) C(r, i) / C(K, r) * i / (r+i-1).
Rational li_optimal_load_equal(std::int64_t K, std::int64_t r);

/// (n - t) / n; requires 3t >= 2n and n > t.
Rational our_load(std::int64_t n, std::int64_t t);

struct JiangComparison {
  std::int64_t b = 0;
  Rational jiang;
  std::optional<Rational> ours;  // absent when 3b^2 < 2(b^2 + b + 1)
  std::string note;
};

/// Symmetric-design scheme load b^2(b+1) / ((b^2+b+1)(b^2-1)) against the
/// cyclic scheme at n = b^2+b+1, t = b^2. b is not checked for being a prime
/// power.
JiangComparison jiang_sbibd_loads(std::int64_t b);

enum class Table1Row {
  kLi,
  kWoolsey,
  kJiangPda,
  kJiangSdRR,
  kJiangSdRKr,
  kChengTDesign,
  kChengGdd,
  kChengSd,
  kChengAd,
  kChengAd0,
  kNew,
};

std::string_view row_name(Table1Row row);
std::optional<Table1Row> parse_row(std::string_view name);
const std::vector<Table1Row>& all_rows();

using Symbols = std::map<std::string, std::int64_t, std::less<>>;

/// Closed-form load of one comparison-table row. Symbols per row:
///   li: K r s            woolsey: K r          jiang_pda: K r s
///   jiang_sd_rr: K r     jiang_sd_rKr: K r     cheng_tdesign: N M lambda t
///   cheng_gdd: m q M lambda t                  cheng_sd: K r
///   cheng_ad: n k        cheng_ad0: n k        new: K r
/// Throws ParameterError on a missing symbol or out-of-domain values.
LoadReport table1_loads(Table1Row row, const Symbols& symbols);

struct Inequality {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;  // lhs > rhs
};

struct Lemma31Report {
  std::int64_t p = 0;
  int w = 0;
  std::int64_t y = 0;
  /// sum_{i=0}^{y} i C(y, y-i) C(p^w, i)  >  (y-2) C(p^w + y, y)
  Inequality main;
  /// 2 C(y,3) C(p^w, y-3)  >  sum_{i=0}^{y-3} (y-2-i) C(y, y-i) C(p^w, i)
  Inequality tail_bound;
  /// C(p^w, y)  >  C(y,3) C(p^w, y-3)
  Inequality ratio_bound;
};

/// Exact evaluation only; the inequalities are asymptotic in p and may fail
/// for small p.
Lemma31Report lemma31_check(const FamilyParams& fp);

/// L_Li(p^w + y, p^w, p^w) / (y / (p^w + y)). Requires p^w > 2y so the
/// cyclic scheme exists.
Rational asymptotic_ratio(const FamilyParams& fp);

struct SandwichBounds {
  Rational lower;  // (y-2) / (p^w + y - 1)
  Rational li;
  Rational upper;  // y / (p^w + y - 1)
  bool holds = false;
};

SandwichBounds sandwich_bounds(const FamilyParams& fp);

}  // namespace cdc::metrics
