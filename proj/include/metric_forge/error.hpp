// Copyright 2026 The metric-forge Authors
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
#include <string_view>
#include <vector>

namespace mforge {

enum class ErrorCode {
  AsymmetricMatrix,
  NegativeDistance,
  ZeroOffDiagonal,
  TriangleViolation,
  MalformedInput,
  DisconnectedGraph,
  CoincidentImages,
  InvalidParameters,
  GenerationFailure,
  NotRegular,
  TooLarge,
  DegenerateSpace,
  DimensionMismatch,
  InvalidCertificate,
  OddOrder,
  NoSpectralGap,
  CertificateCheckFailed,
  ConvergenceFailure,
  Infeasible,
  Unbounded,
  NumericalFailure,
  NoSeparatedCommodity,
  InvalidLabeling,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every fallible operation in the library.
///
/// `witness` carries zero-based indices relevant to the failure (the violating
/// triple for TriangleViolation, the coincident pair for CoincidentImages, ...).
/// `values` carries numeric context such as a bracket or an eigenvalue.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> witness = {}, std::vector<double> values = {});

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
  std::vector<double> values_;
};

}  // namespace mforge
