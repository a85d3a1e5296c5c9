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

#include "cdc/decoder.hpp"

#include <string>

#include "cdc/error.hpp"

namespace cdc::scheme {
namespace {

using ff::FieldElement;

// Right-hand side after removing the receiver's known terms, indexed by
// encoder row, plus the receiver's unknown canonical columns.
struct Residual {
  int m = 0;
  int first_unknown = 0;  // canonical columns [first_unknown, first_unknown + n - t)
  std::vector<FieldElement> rhs;
};

Residual residual_system(const SchemePlan& plan, int node, int file,
                         std::span<const CodedSignal> signals, const IVMap& local_ivs) {
  const int n = plan.n();
  const int t = plan.t();
  if (node < 0 || node >= n || file < 0 || file >= n) {
    throw ParameterError("node or group index out of range");
  }
  if (!plan.stores(node, file)) {
    throw DecodePreconditionError("node " + std::to_string(node) + " does not compute function " +
                                  std::to_string(file) + "; it has nothing to decode in this group");
  }
  const FileEncoder& enc = plan.encoder(file);
  const int d = n - t;

  std::vector<const CodedSignal*> by_slot(d, nullptr);
  for (const auto& s : signals) {
    if (s.file != file) continue;
    if (s.slot < 0 || s.slot >= d || s.sender != enc.senders[s.slot]) {
      throw DecodePreconditionError("signal from node " + std::to_string(s.sender) + " slot " +
                                    std::to_string(s.slot) + " does not belong to group " +
                                    std::to_string(file));
    }
    by_slot[s.slot] = &s;
  }

  Residual res;
  res.m = canonical_index(n, file, node);
  res.first_unknown = res.m - n + t;
  res.rhs.reserve(d);
  for (int j = 0; j < d; ++j) {
    if (by_slot[j] == nullptr) {
      throw DecodePreconditionError("missing signal for group " + std::to_string(file) +
                                    " slot " + std::to_string(j));
    }
    FieldElement b = by_slot[j]->payload;
    for (int k = 0; k < n - 1; ++k) {
      const FieldElement& coeff = enc.matrix.at(j, k);
      if (coeff.is_zero() || (k >= res.first_unknown && k < res.first_unknown + d)) continue;
      const auto it = local_ivs.find({file, enc.columns[k]});
      if (it == local_ivs.end()) {
        throw IncompleteMapPhaseError("node " + std::to_string(node) + " lacks v_{" +
                                      std::to_string(file) + "," +
                                      std::to_string(enc.columns[k]) + "}");
      }
      b -= coeff * it->second;
    }
    res.rhs.push_back(b);
  }
  return res;
}

IVMap to_map(const SchemePlan& plan, int file, int first_unknown,
             const std::vector<FieldElement>& values) {
  const FileEncoder& enc = plan.encoder(file);
  IVMap out;
  for (std::size_t u = 0; u < values.size(); ++u) {
    out.emplace(IVKey{file, enc.columns[first_unknown + static_cast<int>(u)]}, values[u]);
  }
  return out;
}

// Closed-form solvers. Canonical columns in [n-t-1, t-1] are Vandermonde
// columns: entry (j, k) = g_k^j with g_k = a_{k-n+t+1}, a_0 = a_{2t-n} = 1.
class StructuredSolver {
 public:
  StructuredSolver(const SchemePlan& plan, const Residual& res)
      : n_(plan.n()), t_(plan.t()), d_(plan.n() - plan.t()), coeffs_(plan.coeffs()),
        one_(FieldElement::one(plan.field())), b_(res.rhs), m_(res.m) {}

  std::vector<FieldElement> solve(DecodeCase c) const {
    switch (c) {
      case DecodeCase::kUpperTriangular: return upper_triangular();
      case DecodeCase::kLowerTriangular: return lower_triangular();
      case DecodeCase::kVandermonde: return vandermonde();
      case DecodeCase::kLeadingBordered: return leading_bordered();
      case DecodeCase::kTrailingBordered: return trailing_bordered();
    }
    throw SchemeInvariantError("unknown decode case");
  }

 private:
  FieldElement generator(int column) const {
    const int idx = column - (n_ - t_ - 1);
    return idx == 2 * t_ - n_ ? one_ : coeffs_.at(idx);
  }

  // Row j of columns [j, d-1] all ones: y_k = b_k - b_{k+1}.
  std::vector<FieldElement> upper_triangular() const {
    std::vector<FieldElement> y(b_);
    for (int k = 0; k + 1 < d_; ++k) y[k] = b_[k] - b_[k + 1];
    return y;
  }

  // Row j of unknowns [0, j] all ones: y_u = b_u - b_{u-1}.
  std::vector<FieldElement> lower_triangular() const {
    std::vector<FieldElement> y(b_);
    for (int u = 1; u < d_; ++u) y[u] = b_[u] - b_[u - 1];
    return y;
  }

  std::vector<FieldElement> vandermonde() const {
    std::vector<FieldElement> nodes;
    for (int k = m_ - n_ + t_; k < m_; ++k) nodes.push_back(generator(k));
    return ff::solve_vandermonde(nodes, b_);
  }

  // Unknowns: staircase columns [c0, d-1] then Vandermonde columns [d, m-1].
  // With U_j = sum_{c >= j} y_c, rows 0..c0 read U_{c0} + sum_k g_k^j z_k,
  // a Vandermonde system in (1, g_1, ..., g_c0).
  std::vector<FieldElement> leading_bordered() const {
    const int c0 = m_ - n_ + t_;
    std::vector<FieldElement> nodes{one_};
    for (int k = d_; k < m_; ++k) nodes.push_back(generator(k));
    const std::vector<FieldElement> head(b_.begin(), b_.begin() + c0 + 1);
    const std::vector<FieldElement> sol = ff::solve_vandermonde(nodes, head);

    std::vector<FieldElement> suffix(d_ + 1, FieldElement::zero(one_.spec()));
    suffix[c0] = sol[0];
    for (int j = c0 + 1; j < d_; ++j) suffix[j] = b_[j] - vandermonde_terms(nodes, sol, j);

    std::vector<FieldElement> y;
    for (int c = c0; c < d_; ++c) y.push_back(suffix[c] - suffix[c + 1]);
    y.insert(y.end(), sol.begin() + 1, sol.end());
    return y;
  }

  // Unknowns: Vandermonde columns [c0, t-2] then staircase columns [t-1, m-1]
  // where row j covers [t-1, j+t-1]. Rows j >= j0 = m-t see the whole
  // staircase sum P, giving a Vandermonde system in powers j0.. of
  // (1, g_c0, ..., g_{t-2}); earlier rows give the prefix sums.
  std::vector<FieldElement> trailing_bordered() const {
    const int c0 = m_ - n_ + t_;
    const int j0 = m_ - t_;
    std::vector<FieldElement> nodes{one_};
    for (int k = c0; k <= t_ - 2; ++k) nodes.push_back(generator(k));
    const std::vector<FieldElement> tail(b_.begin() + j0, b_.end());
    std::vector<FieldElement> sol = ff::solve_vandermonde(nodes, tail);
    for (std::size_t k = 0; k < sol.size(); ++k) {
      sol[k] = sol[k] / ff::pow(nodes[k], static_cast<std::uint64_t>(j0));
    }

    std::vector<FieldElement> prefix;
    for (int j = 0; j < j0; ++j) prefix.push_back(b_[j] - vandermonde_terms(nodes, sol, j));

    std::vector<FieldElement> y(sol.begin() + 1, sol.end());
    y.push_back(prefix[0]);
    for (int j = 1; j < j0; ++j) y.push_back(prefix[j] - prefix[j - 1]);
    y.push_back(sol[0] - prefix[j0 - 1]);
    return y;
  }

  // sum_{k >= 1} nodes[k]^row * sol[k]; index 0 holds the staircase unknown.
  static FieldElement vandermonde_terms(const std::vector<FieldElement>& nodes,
                                        const std::vector<FieldElement>& sol, int row) {
    FieldElement acc = FieldElement::zero(nodes.front().spec());
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      acc += ff::pow(nodes[k], static_cast<std::uint64_t>(row)) * sol[k];
    }
    return acc;
  }

  int n_;
  int t_;
  int d_;
  const std::vector<FieldElement>& coeffs_;
  FieldElement one_;
  const std::vector<FieldElement>& b_;
  int m_;
};

}  // namespace

int canonical_index(int n, int file, int node) { return ((node - file - 1) % n + n) % n; }

DecodeCase classify_receiver(int n, int t, int m) {
  if (m < n - t || m > n - 1) {
    throw DecodePreconditionError("index " + std::to_string(m) + " is not a receiver");
  }
  if (m == n - t) return DecodeCase::kUpperTriangular;
  if (m == n - 1) return DecodeCase::kLowerTriangular;
  if (m <= 2 * n - 2 * t - 2) return DecodeCase::kLeadingBordered;
  if (m <= t) return DecodeCase::kVandermonde;
  return DecodeCase::kTrailingBordered;
}

ff::FieldMatrix receiver_matrix(const SchemePlan& plan, int node, int file) {
  if (!plan.stores(node, file)) {
    throw DecodePreconditionError("node " + std::to_string(node) + " is not a receiver of group " +
                                  std::to_string(file));
  }
  const int first = canonical_index(plan.n(), file, node) - plan.n() + plan.t();
  std::vector<std::size_t> cols;
  for (int u = 0; u < plan.n() - plan.t(); ++u) cols.push_back(static_cast<std::size_t>(first + u));
  return plan.encoder(file).matrix.select_columns(cols);
}

IVMap decode_missing_ivs(const SchemePlan& plan, int node, int file,
                         std::span<const CodedSignal> signals, const IVMap& local_ivs) {
  const Residual res = residual_system(plan, node, file, signals, local_ivs);
  const DecodeCase c = classify_receiver(plan.n(), plan.t(), res.m);
  std::vector<FieldElement> values;
  try {
    values = StructuredSolver(plan, res).solve(c);
  } catch (const SingularMatrixError& e) {
    throw SchemeInvariantError("singular residual system at node " + std::to_string(node) +
                               ", group " + std::to_string(file) + ": " + e.what());
  }
  return to_map(plan, file, res.first_unknown, values);
}

IVMap decode_missing_ivs_gaussian(const SchemePlan& plan, int node, int file,
                                  std::span<const CodedSignal> signals, const IVMap& local_ivs) {
  const Residual res = residual_system(plan, node, file, signals, local_ivs);
  std::vector<FieldElement> values;
  try {
    values = ff::solve_linear_system(receiver_matrix(plan, node, file), res.rhs);
  } catch (const SingularMatrixError& e) {
    throw SchemeInvariantError("singular residual system at node " + std::to_string(node) +
                               ", group " + std::to_string(file) + ": " + e.what());
  }
  return to_map(plan, file, res.first_unknown, values);
}

}  // namespace cdc::scheme
