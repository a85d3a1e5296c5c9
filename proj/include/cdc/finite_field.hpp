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

// Arithmetic and linear algebra over GF(2^T) in polynomial basis, T <= 16.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cdc::ff {

inline constexpr unsigned kMaxWidth = 16;

/// True iff `poly` (bit i = coefficient of x^i) has exact degree `degree` and
/// no factor of degree 1..degree/2 over GF(2).
bool is_irreducible(std::uint32_t poly, unsigned degree);

/// Field parameters: width T and a degree-T irreducible reduction polynomial.
class FieldSpec {
 public:
  /// Throws ParameterError unless 1 <= width <= 16 and `reduction_poly` is an
  /// irreducible polynomial of degree `width`.
  static FieldSpec make(unsigned width_bits, std::uint32_t reduction_poly);

  /// Built-in irreducible polynomial for every width in [1, 16]; width 8 uses
  /// x^8 + x^4 + x^3 + x + 1.
  static FieldSpec standard(unsigned width_bits);

  static FieldSpec gf256() { return standard(8); }

  unsigned width() const noexcept { return width_; }
  std::uint32_t reduction_poly() const noexcept { return poly_; }
  std::uint32_t order() const noexcept { return 1u << width_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(unsigned width, std::uint32_t poly) : width_(width), poly_(poly) {}

  unsigned width_;
  std::uint32_t poly_;
};

class FieldElement {
 public:
  /// Throws ParameterError if value >= 2^T.
  FieldElement(const FieldSpec& spec, std::uint32_t value);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

  std::uint32_t value() const noexcept { return value_; }
  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldSpec spec_;
  std::uint32_t value_;
};

// All binary operations throw SpecMismatchError when the operands come from
// different fields.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
/// Throws DivisionByZeroError for a == 0.
FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t k);
FieldElement div(const FieldElement& a, const FieldElement& b);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
// Characteristic 2: subtraction is addition.
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return div(a, b); }
inline FieldElement& operator+=(FieldElement& a, const FieldElement& b) { return a = add(a, b); }
inline FieldElement& operator-=(FieldElement& a, const FieldElement& b) { return a = add(a, b); }

/// Dense row-major matrix over one field.
class FieldMatrix {
 public:
  FieldMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(const FieldSpec& spec, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& spec() const noexcept { return spec_; }

  const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Throws SpecMismatchError if `value` is from another field.
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  /// Submatrix keeping the given columns, in the given order.
  FieldMatrix select_columns(std::span<const std::size_t> columns) const;

  std::vector<FieldElement> multiply(std::span<const FieldElement> v) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// Solves m x = rhs by Gaussian elimination, pivoting on the first nonzero
/// entry of each column. Throws SingularMatrixError carrying the rank when m
/// is singular and ParameterError on shape mismatch.
std::vector<FieldElement> solve_linear_system(const FieldMatrix& m,
                                              std::span<const FieldElement> rhs);

/// Rank of m (same elimination as solve_linear_system).
std::size_t rank(const FieldMatrix& m);

/// Returns (1, a_1, ..., a_{count-1}): pairwise distinct nonzero elements
/// with 1 first and the rest in ascending order. Throws FieldTooSmallError if
/// count > 2^T - 1.
std::vector<FieldElement> distinct_coefficients(std::size_t count, const FieldSpec& spec);

/// Matrix with entry (j, k) = nodes[k]^j for j in [0, rows).
FieldMatrix vandermonde(std::span<const FieldElement> nodes, std::size_t rows);

/// Solves sum_k nodes[k]^j x_k = rhs[j] for j in [0, d) with d = nodes.size()
/// via Lagrange basis polynomials in O(d^2). Throws SingularMatrixError if two
/// nodes coincide.
std::vector<FieldElement> solve_vandermonde(std::span<const FieldElement> nodes,
                                            std::span<const FieldElement> rhs);

}  // namespace cdc::ff
