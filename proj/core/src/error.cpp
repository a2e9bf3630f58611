// Copyright 2026 The whtree Authors
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

#include "whtree/error.hpp"

namespace wht {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeIdentityViolated: return "DegreeIdentityViolated";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::PendentRoot: return "PendentRoot";
    case ErrorCode::VertexNotInTree: return "VertexNotInTree";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NoInternalVertex: return "NoInternalVertex";
    case ErrorCode::NotEnoughPendents: return "NotEnoughPendents";
    case ErrorCode::TupleMismatch: return "TupleMismatch";
    case ErrorCode::NotInternal: return "NotInternal";
    case ErrorCode::CannotRollupRoot: return "CannotRollupRoot";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WouldChangeDegrees: return "WouldChangeDegrees";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace wht
