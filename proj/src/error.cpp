// Copyright 2026 The sigconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sigconj/error.hpp"

namespace sigconj {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::MalformedSign: return "MalformedSign";
    case ErrorCode::FirstCoordinateNotOne: return "FirstCoordinateNotOne";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::NotSymUnderPhi: return "NotSymUnderPhi";
    case ErrorCode::NotAntiSymUnderPhi: return "NotAntiSymUnderPhi";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sigconj
