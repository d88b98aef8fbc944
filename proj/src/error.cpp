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

#include "metric_forge/error.hpp"

namespace mforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::CoincidentImages: return "CoincidentImages";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateSpace: return "DegenerateSpace";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::NoSpectralGap: return "NoSpectralGap";
    case ErrorCode::CertificateCheckFailed: return "CertificateCheckFailed";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::NoSeparatedCommodity: return "NoSeparatedCommodity";
    case ErrorCode::InvalidLabeling: return "InvalidLabeling";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::size_t> witness, std::vector<double> values)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)),
      values_(std::move(values)) {}

}  // namespace mforge
