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

// The cascaded coded distributed computing scheme on the cyclic 1-design:
// n nodes, n files, n Reduce functions, computation load r = t, replication
// s = t and communication load (n - t) / n, valid whenever 3t >= 2n.
//
// Node c stores files B_c and computes functions B_c. For every function i
// the n - t nodes outside B_i each multicast one linear combination of the
// intermediate values v_{i,x}, x != i; every node in B_i recovers its n - t
// missing v_{i,x} from those signals.

#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cdc/designs.hpp"
#include "cdc/exact.hpp"
#include "cdc/finite_field.hpp"

namespace cdc::scheme {

struct SchemeParams {
  int n = 0;
  int t = 0;
  ff::FieldSpec field = ff::FieldSpec::gf256();
};

/// Throws ParameterError naming the first violated constraint among
/// t >= 1, n > t, 3t >= 2n and 2^T >= 2t - n + 1.
void validate(const SchemeParams& params);

/// Identifies v_{q,x}: the intermediate value of function q on file x.
struct IVKey {
  int q = 0;
  int x = 0;

  friend auto operator<=>(const IVKey&, const IVKey&) = default;
};

using IVMap = std::map<IVKey, ff::FieldElement>;

/// One multicast symbol. `file` names the coding group: the index i shared by
/// the missing file and the Reduce function whose values v_{i,x} are combined
/// (placement and assignment coincide). `slot` is the encoder row.
struct CodedSignal {
  int sender = 0;
  int file = 0;
  int slot = 0;
  ff::FieldElement payload;

  friend bool operator==(const CodedSignal&, const CodedSignal&) = default;
};

/// Encoder for one coding group: row j is sent by senders[j], column k
/// multiplies v_{file, columns[k]}.
struct FileEncoder {
  int file = 0;
  std::vector<int> senders;
  std::vector<int> columns;
  ff::FieldMatrix matrix;
};

class SchemePlan {
 public:
  const SchemeParams& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n; }
  int t() const noexcept { return params_.t; }
  const ff::FieldSpec& field() const noexcept { return params_.field; }

  int nodes() const noexcept { return params_.n; }      // K
  int files() const noexcept { return params_.n; }      // N
  int functions() const noexcept { return params_.n; }  // Q
  int computation_load() const noexcept { return params_.t; }  // r
  int replication() const noexcept { return params_.t; }       // s

  const designs::Design& design() const noexcept { return design_; }
  /// Files stored by `node` (Z_c).
  const designs::Block& placement(int node) const { return design_.blocks.at(node); }
  /// Reduce functions computed by `node` (Q_c).
  const designs::Block& assignment(int node) const { return design_.blocks.at(node); }
  bool stores(int node, int file) const;
  /// Nodes storing file x (D_x), ascending.
  std::vector<int> file_holders(int file) const;
  /// Nodes computing function q (A_q), ascending.
  std::vector<int> function_nodes(int q) const;

  /// (1, a_1, ..., a_{2t-1-n}).
  const std::vector<ff::FieldElement>& coeffs() const noexcept { return coeffs_; }
  const FileEncoder& encoder(int file) const { return encoders_.at(file); }
  const std::vector<FileEncoder>& encoders() const noexcept { return encoders_; }

 private:
  friend SchemePlan build_scheme(int n, int t, const ff::FieldSpec& field);
  SchemePlan() = default;

  SchemeParams params_;
  designs::Design design_;
  std::vector<ff::FieldElement> coeffs_;
  std::vector<FileEncoder> encoders_;
};

SchemePlan build_scheme(int n, int t, const ff::FieldSpec& field);

/// The (n-t) x (n-1) encoder of the canonical group i = n-1. Row j (sent by
/// node j) is zero outside columns [j, j+t-1], one on [j, n-t-1] and
/// [t-1, j+t-1], and a_m^j in column n-t+m-1 for m in [1, 2t-1-n].
/// Throws ParameterError unless coeffs.size() == 2t - n.
ff::FieldMatrix encoder_matrix(int n, int t, std::span<const ff::FieldElement> coeffs);

/// {(q, x) : q in B_node, x not in B_node}, ascending.
std::vector<IVKey> required_iv_set(const SchemePlan& plan, int node);

/// One signal per group i not in B_node, ascending in i. Throws
/// IncompleteMapPhaseError if an intermediate value the encoder row needs is
/// absent from `local_ivs`.
std::vector<CodedSignal> encode_signals(const SchemePlan& plan, int node, const IVMap& local_ivs);

/// Symbolic form of the signal in `slot` of group `file`, in the encoder's
/// column order, e.g. "v_{5,1} + a_1 v_{5,2} + v_{5,3} + v_{5,4}".
std::string signal_formula(const SchemePlan& plan, int file, int slot);

/// Exact (n - t) / n.
Rational communication_load(const SchemePlan& plan);

}  // namespace cdc::scheme
