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

#include "cdc/finite_field.hpp"

#include <array>
#include <bit>
#include <string>
#include <utility>

#include "cdc/error.hpp"

namespace cdc::ff {
namespace {

constexpr std::array<std::uint32_t, kMaxWidth + 1> kStandardPolys = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11B,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

int degree_of(std::uint32_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec())) {
    throw SpecMismatchError("field elements from GF(2^" + std::to_string(a.spec().width()) +
                            ") and GF(2^" + std::to_string(b.spec().width()) + ") poly 0x" +
                            std::to_string(b.spec().reduction_poly()) + " mixed");
  }
}

// Row-reduces `a` (and `rhs` alongside, when non-empty) in place. Returns the
// rank; pivot_cols[r] is the pivot column of row r.
std::size_t eliminate(FieldMatrix& a, std::vector<FieldElement>& rhs,
                      std::vector<std::size_t>& pivot_cols) {
  const bool with_rhs = !rhs.empty();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        FieldElement tmp = a.at(row, c);
        a.set(row, c, a.at(pivot, c));
        a.set(pivot, c, tmp);
      }
      if (with_rhs) std::swap(rhs[row], rhs[pivot]);
    }
    const FieldElement inv = inverse(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.set(row, c, a.at(row, c) * inv);
    if (with_rhs) rhs[row] = rhs[row] * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const FieldElement factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.set(r, c, a.at(r, c) - factor * a.at(row, c));
      if (with_rhs) rhs[r] = rhs[r] - factor * rhs[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return row;
}

}  // namespace

bool is_irreducible(std::uint32_t poly, unsigned degree) {
  if (degree == 0 || degree > 31 || degree_of(poly) != static_cast<int>(degree)) return false;
  for (unsigned d = 1; d <= degree / 2; ++d) {
    for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
      if (poly_mod(poly, q) == 0) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::make(unsigned width_bits, std::uint32_t reduction_poly) {
  if (width_bits < 1 || width_bits > kMaxWidth) {
    throw ParameterError("field width T must lie in [1, 16], got " + std::to_string(width_bits));
  }
  if (!is_irreducible(reduction_poly, width_bits)) {
    throw ParameterError("reduction polynomial " + std::to_string(reduction_poly) +
                         " is not an irreducible polynomial of degree " +
                         std::to_string(width_bits));
  }
  return FieldSpec(width_bits, reduction_poly);
}

FieldSpec FieldSpec::standard(unsigned width_bits) {
  if (width_bits < 1 || width_bits > kMaxWidth) {
    throw ParameterError("field width T must lie in [1, 16], got " + std::to_string(width_bits));
  }
  return make(width_bits, kStandardPolys[width_bits]);
}

FieldElement::FieldElement(const FieldSpec& spec, std::uint32_t value) : spec_(spec), value_(value) {
  if (value >= spec.order()) {
    throw ParameterError("value " + std::to_string(value) + " outside GF(2^" +
                         std::to_string(spec.width()) + ")");
  }
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.spec(), a.value() ^ b.value()};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const unsigned width = a.spec().width();
  const std::uint32_t poly = a.spec().reduction_poly();
  const std::uint32_t top = 1u << width;
  std::uint32_t x = a.value();
  std::uint32_t y = b.value();
  std::uint32_t acc = 0;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= poly;
  }
  return {a.spec(), acc};
}

FieldElement pow(const FieldElement& a, std::uint64_t k) {
  FieldElement result = FieldElement::one(a.spec());
  FieldElement base = a;
  while (k != 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZeroError("zero has no multiplicative inverse");
  // a^(2^T - 2) = a^-1 in the multiplicative group of order 2^T - 1.
  return pow(a, a.spec().order() - 2);
}

FieldElement div(const FieldElement& a, const FieldElement& b) { return a * inverse(b); }

FieldMatrix::FieldMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::zero(spec)) {}

FieldMatrix FieldMatrix::identity(const FieldSpec& spec, std::size_t n) {
  FieldMatrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(spec));
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (!(value.spec() == spec_)) throw SpecMismatchError("matrix entry from a different field");
  entries_[r * cols_ + c] = value;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> columns) const {
  FieldMatrix out(spec_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) out.set(r, k, at(r, columns[k]));
  }
  return out;
}

std::vector<FieldElement> FieldMatrix::multiply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw ParameterError("matrix-vector dimension mismatch");
  std::vector<FieldElement> out(rows_, FieldElement::zero(spec_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  }
  return out;
}

std::vector<FieldElement> solve_linear_system(const FieldMatrix& m,
                                              std::span<const FieldElement> rhs) {
  if (m.rows() != m.cols()) throw ParameterError("solve_linear_system needs a square matrix");
  if (rhs.size() != m.rows()) throw ParameterError("right-hand side length differs from rows");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  FieldMatrix a = m;
  std::vector<FieldElement> b(rhs.begin(), rhs.end());
  std::vector<std::size_t> pivots;
  const std::size_t r = eliminate(a, b, pivots);
  if (r < n) throw SingularMatrixError(r, n);
  // Square and full rank: the reduced form is the identity, b holds x.
  return b;
}

std::size_t rank(const FieldMatrix& m) {
  FieldMatrix a = m;
  std::vector<FieldElement> none;
  std::vector<std::size_t> pivots;
  return eliminate(a, none, pivots);
}

std::vector<FieldElement> distinct_coefficients(std::size_t count, const FieldSpec& spec) {
  if (count > spec.order() - 1) {
    throw FieldTooSmallError("need " + std::to_string(count) + " distinct nonzero coefficients but GF(2^" +
                             std::to_string(spec.width()) + ") has only " +
                             std::to_string(spec.order() - 1) + " (requires 2^T >= 2t - n + 1)");
  }
  std::vector<FieldElement> out;
  out.reserve(count);
  for (std::uint32_t v = 1; out.size() < count; ++v) out.emplace_back(spec, v);
  return out;
}

FieldMatrix vandermonde(std::span<const FieldElement> nodes, std::size_t rows) {
  if (nodes.empty()) throw ParameterError("vandermonde needs at least one node");
  FieldMatrix m(nodes.front().spec(), rows, nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    FieldElement p = FieldElement::one(nodes[k].spec());
    for (std::size_t j = 0; j < rows; ++j) {
      m.set(j, k, p);
      p = p * nodes[k];
    }
  }
  return m;
}

std::vector<FieldElement> solve_vandermonde(std::span<const FieldElement> nodes,
                                            std::span<const FieldElement> rhs) {
  const std::size_t d = nodes.size();
  if (rhs.size() != d) throw ParameterError("vandermonde system needs one equation per node");
  if (d == 0) return {};
  const FieldSpec& spec = nodes.front().spec();
  const FieldElement zero = FieldElement::zero(spec);

  // master(z) = prod_l (z - g_l), coefficients low to high.
  std::vector<FieldElement> master{FieldElement::one(spec)};
  for (const auto& g : nodes) {
    std::vector<FieldElement> next(master.size() + 1, zero);
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] += master[i] * g;
    }
    master = std::move(next);
  }

  std::vector<FieldElement> x(d, zero);
  std::vector<FieldElement> quotient(d, zero);
  for (std::size_t k = 0; k < d; ++k) {
    // quotient(z) = master(z) / (z - g_k); quotient(g_l) = 0 for l != k.
    quotient[d - 1] = master[d];
    for (std::size_t i = d - 1; i > 0; --i) quotient[i - 1] = master[i] + nodes[k] * quotient[i];
    FieldElement denom = zero;
    FieldElement numer = zero;
    FieldElement power = FieldElement::one(spec);
    for (std::size_t i = 0; i < d; ++i) {
      denom += quotient[i] * power;
      numer += quotient[i] * rhs[i];
      power = power * nodes[k];
    }
    if (denom.is_zero()) throw SingularMatrixError(rank(vandermonde(nodes, d)), d);
    x[k] = numer / denom;
  }
  return x;
}

}  // namespace cdc::ff
