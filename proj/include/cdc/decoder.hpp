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

// Receiver-side decoding. For group i and receiver node c, let
// m = (c - i - 1) mod n be the receiver's index after rotating group i onto
// the canonical group n-1. Receivers satisfy n-t <= m <= n-1 and miss the
// canonical columns [m-n+t, m-1]. The residual system has one of five shapes.

#pragma once

#include <span>
#include <vector>

#include "cdc/scheme.hpp"

namespace cdc::scheme {

enum class DecodeCase {
  kUpperTriangular = 1,   // m = n-t
  kLeadingBordered = 2,   // n-t+1 <= m <= 2n-2t-2
  kVandermonde = 3,       // 2n-2t-1 <= m <= t
  kTrailingBordered = 4,  // t+1 <= m <= n-2
  kLowerTriangular = 5,   // m = n-1
};

/// Rotated index of `node` relative to group `file`: (node - file - 1) mod n.
int canonical_index(int n, int file, int node);

/// Case for canonical receiver index m. Exact matches m = n-t and m = n-1 take
/// precedence over the ranges, which overlap when t = n-1. Throws
/// DecodePreconditionError if m is not a receiver index.
DecodeCase classify_receiver(int n, int t, int m);

/// Coefficients of the residual system for `node` in group `file`: the
/// encoder restricted to the node's unknown columns.
ff::FieldMatrix receiver_matrix(const SchemePlan& plan, int node, int file);

/// Recovers the n - t values v_{file,x}, x not in B_node, from the group's
/// signals and the node's local values, using the closed-form solver for the
/// receiver's case. Throws DecodePreconditionError if `node` does not compute
/// function `file` or a signal is missing, IncompleteMapPhaseError if a local
/// value is missing.
IVMap decode_missing_ivs(const SchemePlan& plan, int node, int file,
                         std::span<const CodedSignal> signals, const IVMap& local_ivs);

/// Same contract, solved by generic Gaussian elimination. Used as the oracle
/// for decode_missing_ivs. Throws SchemeInvariantError on a singular system.
IVMap decode_missing_ivs_gaussian(const SchemePlan& plan, int node, int file,
                                  std::span<const CodedSignal> signals, const IVMap& local_ivs);

}  // namespace cdc::scheme
