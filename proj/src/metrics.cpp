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

#include "cdc/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cdc/error.hpp"

namespace cdc::metrics {
namespace {

constexpr std::string_view kWoolseyNote =
    "formula transcribed as printed; contains suspected typos (k-r, binomial of K/2)";

std::int64_t symbol(const Symbols& symbols, Table1Row row, std::string_view name) {
  const auto it = symbols.find(name);
  if (it == symbols.end()) {
    throw ParameterError("row " + std::string(row_name(row)) + " needs symbol '" +
                         std::string(name) + "'");
  }
  return it->second;
}

void require(bool condition, Table1Row row, std::string_view what) {
  if (!condition) {
    throw ParameterError("row " + std::string(row_name(row)) + ": " + std::string(what));
  }
}

BigInt pow_big(const BigInt& base, std::int64_t e) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

Rational pow_rat(const Rational& base, std::int64_t e) {
  Rational out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Integer value of a rational that must be integral.
BigInt integral(const Rational& q, Table1Row row, std::string_view what) {
  require(boost::multiprecision::denominator(q) == 1, row,
          std::string(what) + " is not an integer for these parameters");
  return boost::multiprecision::numerator(q);
}

}  // namespace

LoadReport make_report(std::string scheme_name, BigInt K, BigInt r, BigInt s, BigInt N, BigInt Q,
                       Rational load, std::string note) {
  if (note.empty() && (load < 0 || load > 1)) {
    throw ParameterError(scheme_name + " load " + to_string(load) +
                         " outside [0, 1]; parameters lie outside the formula's domain");
  }
  LoadReport report{std::move(scheme_name), std::move(K), std::move(r), std::move(s),
                    std::move(N),           std::move(Q), std::move(load), {},
                    std::move(note)};
  report.load_float = to_decimal(report.load, 12);
  return report;
}

FamilyParams FamilyParams::make(std::int64_t p, int w, std::vector<int> vs) {
  if (p < 2) throw ParameterError("family requires p >= 2");
  if (w < 1) throw ParameterError("family requires w >= 1");
  if (vs.empty()) throw ParameterError("family requires at least one exponent v_i");
  std::set<int> seen{w};
  for (int v : vs) {
    if (v < 0) throw ParameterError("exponents v_i must be non-negative");
    if (!seen.insert(v).second) throw ParameterError("w, v_1, ..., v_c must be distinct");
  }
  if (w / 2 < *std::max_element(vs.begin(), vs.end())) {
    throw ParameterError("floor(w/2) >= max(v_i) violated");
  }
  FamilyParams fp;
  fp.p_ = p;
  fp.w_ = w;
  fp.vs_ = std::move(vs);
  auto ipow = [p](int e) {
    BigInt v = pow_big(p, e);
    if (v > BigInt(1) << 62) throw ParameterError("p^w exceeds the supported range");
    return static_cast<std::int64_t>(v);
  };
  fp.p_pow_w_ = ipow(w);
  for (int v : fp.vs_) fp.y_ += ipow(v);
  return fp;
}

Rational li_optimal_load(std::int64_t K, std::int64_t r, std::int64_t s) {
  if (K < 1 || r < 1 || s < 1 || r > K || s > K) {
    throw ParameterError("li_optimal_load requires 1 <= r, s <= K");
  }
  const BigInt denom = binomial(K, s);
  Rational total = 0;
  for (std::int64_t l = std::max(r + 1, s); l <= std::min(r + s, K); ++l) {
    total += Rational(binomial(K - r, K - l) * binomial(r, l - s), denom) * Rational(l - r, l - 1);
  }
  return total;
}

Rational li_optimal_load_equal(std::int64_t K, std::int64_t r) {
  if (K < 1 || r < 1 || r > K) throw ParameterError("li_optimal_load_equal requires 1 <= r <= K");
  const BigInt denom = binomial(K, r);
  Rational total = 0;
  for (std::int64_t i = 1; i <= std::min(K - r, r); ++i) {
    total += Rational(binomial(K - r, i) * binomial(r, i), denom) * Rational(i, r + i - 1);
  }
  return total;
}

Rational our_load(std::int64_t n, std::int64_t t) {
  if (t < 1 || n <= t) throw ParameterError("n > t >= 1 violated");
  if (3 * t < 2 * n) {
    throw ParameterError("3t ≥ 2n violated: 3t = " + std::to_string(3 * t) + " < 2n = " +
                         std::to_string(2 * n));
  }
  return Rational(n - t, n);
}

JiangComparison jiang_sbibd_loads(std::int64_t b) {
  if (b < 2) throw ParameterError("jiang_sbibd_loads requires b >= 2");
  JiangComparison out;
  out.b = b;
  const std::int64_t n = b * b + b + 1;
  const std::int64_t t = b * b;
  out.jiang = Rational(BigInt(t) * (b + 1), BigInt(n) * (t - 1));
  if (3 * t >= 2 * n) {
    out.ours = our_load(n, t);
  } else {
    out.note = "3t = " + std::to_string(3 * t) + " < 2n = " + std::to_string(2 * n) +
               ": cyclic scheme undefined (needs b >= 3)";
  }
  return out;
}

std::string_view row_name(Table1Row row) {
  switch (row) {
    case Table1Row::kLi: return "li";
    case Table1Row::kWoolsey: return "woolsey";
    case Table1Row::kJiangPda: return "jiang_pda";
    case Table1Row::kJiangSdRR: return "jiang_sd_rr";
    case Table1Row::kJiangSdRKr: return "jiang_sd_rKr";
    case Table1Row::kChengTDesign: return "cheng_tdesign";
    case Table1Row::kChengGdd: return "cheng_gdd";
    case Table1Row::kChengSd: return "cheng_sd";
    case Table1Row::kChengAd: return "cheng_ad";
    case Table1Row::kChengAd0: return "cheng_ad0";
    case Table1Row::kNew: return "new";
  }
  return "?";
}

const std::vector<Table1Row>& all_rows() {
  static const std::vector<Table1Row> rows = {
      Table1Row::kLi,       Table1Row::kWoolsey,      Table1Row::kJiangPda, Table1Row::kJiangSdRR,
      Table1Row::kJiangSdRKr, Table1Row::kChengTDesign, Table1Row::kChengGdd, Table1Row::kChengSd,
      Table1Row::kChengAd,  Table1Row::kChengAd0,     Table1Row::kNew};
  return rows;
}

std::optional<Table1Row> parse_row(std::string_view name) {
  for (Table1Row row : all_rows()) {
    if (row_name(row) == name) return row;
  }
  return std::nullopt;
}

LoadReport table1_loads(Table1Row row, const Symbols& sym) {
  const std::string name(row_name(row));
  auto get = [&](std::string_view key) { return symbol(sym, row, key); };

  switch (row) {
    case Table1Row::kLi: {
      const auto K = get("K"), r = get("r"), s = get("s");
      require(1 <= r && r <= K && 1 <= s && s <= K, row, "needs 1 <= r, s <= K");
      return make_report(name, K, r, s, binomial(K, r), binomial(K, s), li_optimal_load(K, r, s));
    }
    case Table1Row::kWoolsey: {
      const auto K = get("K"), r = get("r");
      require(2 <= r && r <= K && K % r == 0 && K % 2 == 0, row, "needs 2 <= r <= K, r | K, K even");
      const BigInt files = pow_big(K / r, r - 1);
      Rational load(pow_big(r, r) * (K - r), pow_big(K, r) * (r - 1));
      const BigInt half_pairs = binomial(K / 2, 2);
      for (std::int64_t l = 2; l <= r; ++l) {
        load += pow_rat(Rational(r, K), r + l) * binomial(r, l) * pow_big(half_pairs, l) *
                Rational(pow_big(2, l) * l, 2 * l - 1);
      }
      return make_report(name, K, r, r, files, files, load, std::string(kWoolseyNote));
    }
    case Table1Row::kJiangPda: {
      const auto K = get("K"), r = get("r"), s = get("s");
      require(2 <= r && r <= K && 1 <= s && s <= K, row, "needs 2 <= r <= K, 1 <= s <= K");
      // The file count (K/r)^{r-1} exists only for r | K; 0 marks it undefined.
      const BigInt files = K % r == 0 ? pow_big(K / r, r - 1) : BigInt(0);
      return make_report(name, K, r, s, files, K / std::gcd(K, s),
                         Rational(s, r - 1) * (1 - Rational(r, K)));
    }
    case Table1Row::kJiangSdRR: {
      const auto K = get("K"), r = get("r");
      require(2 <= r && r < K, row, "needs 2 <= r < K");
      return make_report(name, K, r, r, K, K, Rational(BigInt(r) * (K - r), BigInt(r - 1) * K));
    }
    case Table1Row::kJiangSdRKr: {
      const auto K = get("K"), r = get("r");
      require(1 <= r && r < K, row, "needs 1 <= r < K");
      return make_report(name, K, r, K - r, K, K, Rational(K - r, K - 1));
    }
    case Table1Row::kChengTDesign: {
      const auto N = get("N"), M = get("M"), lambda = get("lambda"), t = get("t");
      require(t >= 2 && t <= M && M <= N && lambda >= 1, row, "needs 2 <= t <= M <= N, lambda >= 1");
      const BigInt K = integral(Rational(lambda * binomial(N, t), binomial(M, t)), row, "K");
      const BigInt r =
          integral(Rational(lambda * binomial(N - 1, t - 1), binomial(M - 1, t - 1)), row, "r");
      return make_report(name, K, r, r, N, N, Rational(N - 1, 2 * N));
    }
    case Table1Row::kChengGdd: {
      const auto m = get("m"), q = get("q"), M = get("M"), lambda = get("lambda"), t = get("t");
      require(t >= 2 && t <= M && M <= m && q >= 1 && lambda >= 1, row,
              "needs 2 <= t <= M <= m, q >= 1, lambda >= 1");
      const BigInt K = integral(
          Rational(lambda * binomial(m, t) * pow_big(q, t), binomial(M, t)), row, "K");
      const BigInt r = integral(
          Rational(lambda * binomial(m - 1, t - 1) * pow_big(q, t - 1), binomial(M - 1, t - 1)),
          row, "r");
      return make_report(name, K, r, r, m * q, m * q, Rational(1, 2) + Rational(q - 2, m * q));
    }
    case Table1Row::kChengSd: {
      const auto K = get("K"), r = get("r");
      require(1 <= r && r < K, row, "needs 1 <= r < K");
      return make_report(name, K, r, K - r, K, K,
                         Rational((K - 1) * (K - 1) - r * K + K, K * (K - 1)));
    }
    case Table1Row::kChengAd: {
      const auto n = get("n"), k = get("k");
      require(1 <= k && k < n, row, "needs 1 <= k < n");
      return make_report(name, n, k, k, n, n, Rational(n - 1, 2 * n));
    }
    case Table1Row::kChengAd0: {
      const auto n = get("n"), k = get("k");
      require(1 <= k && k < n, row, "needs 1 <= k < n");
      return make_report(name, n, k, k, n, n, Rational(2 * n - 2 - k * (k - 1), 2 * n));
    }
    case Table1Row::kNew: {
      const auto K = get("K"), r = get("r");
      return make_report(name, K, r, r, K, K, our_load(K, r));
    }
  }
  throw ParameterError("unknown table row");
}

Lemma31Report lemma31_check(const FamilyParams& fp) {
  const std::int64_t pw = fp.p_pow_w();
  const std::int64_t y = fp.y();
  Lemma31Report out;
  out.p = fp.p();
  out.w = fp.w();
  out.y = y;

  for (std::int64_t i = 0; i <= y; ++i) out.main.lhs += i * binomial(y, y - i) * binomial(pw, i);
  out.main.rhs = (y - 2) * binomial(pw + y, y);
  out.main.holds = out.main.lhs > out.main.rhs;

  out.tail_bound.lhs = 2 * binomial(y, 3) * binomial(pw, y - 3);
  for (std::int64_t i = 0; i <= y - 3; ++i) {
    out.tail_bound.rhs += (y - 2 - i) * binomial(y, y - i) * binomial(pw, i);
  }
  out.tail_bound.holds = out.tail_bound.lhs > out.tail_bound.rhs;

  out.ratio_bound.lhs = binomial(pw, y);
  out.ratio_bound.rhs = binomial(y, 3) * binomial(pw, y - 3);
  out.ratio_bound.holds = out.ratio_bound.lhs > out.ratio_bound.rhs;
  return out;
}

Rational asymptotic_ratio(const FamilyParams& fp) {
  const std::int64_t pw = fp.p_pow_w();
  const std::int64_t y = fp.y();
  if (3 * pw < 2 * (pw + y)) {
    throw ParameterError("3p^w ≥ 2(p^w + y) violated: the cyclic scheme does not exist");
  }
  return li_optimal_load(pw + y, pw, pw) / our_load(pw + y, pw);
}

SandwichBounds sandwich_bounds(const FamilyParams& fp) {
  const std::int64_t pw = fp.p_pow_w();
  const std::int64_t y = fp.y();
  SandwichBounds out;
  out.lower = Rational(y - 2, pw + y - 1);
  out.upper = Rational(y, pw + y - 1);
  out.li = li_optimal_load(pw + y, pw, pw);
  out.holds = out.lower < out.li && out.li < out.upper;
  return out;
}

}  // namespace cdc::metrics
