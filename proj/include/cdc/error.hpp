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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range parameters, violated scheme inequalities.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operands drawn from two different fields.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// The field has fewer nonzero elements than the scheme needs coefficients.
class FieldTooSmallError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t dimension)
      : Error("singular matrix: rank " + std::to_string(rank) + " < " +
              std::to_string(dimension)),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// A node tried to encode before computing all of its local intermediate values.
class IncompleteMapPhaseError : public Error {
 public:
  using Error::Error;
};

/// A decode precondition failed, e.g. the receiver already stores the file.
class DecodePreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal scheme guarantee failed. Never raised for valid plans.
class SchemeInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdc
