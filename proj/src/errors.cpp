// Copyright 2026 The qdilate Authors
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

#include "qdilate/errors.hpp"

namespace qdilate {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InvalidKraus: return "InvalidKraus";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotCP: return "NotCP";
    case ErrorCode::NotRotation: return "NotRotation";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::DegenerateWeights: return "DegenerateWeights";
    case ErrorCode::InconsistentAlpha: return "InconsistentAlpha";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::NonUniformWeights: return "NonUniformWeights";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace qdilate
