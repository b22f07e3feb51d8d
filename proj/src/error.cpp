// Copyright 2026 The ehrtomo Authors.
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

#include "ehrtomo/error.hpp"

namespace ehrtomo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonpositiveDilation: return "NonpositiveDilation";
    case ErrorCode::ToleranceTooSmall: return "ToleranceTooSmall";
    case ErrorCode::OriginInside: return "OriginInside";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::MuTooSmall: return "MuTooSmall";
    case ErrorCode::InvalidBody: return "InvalidBody";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ehrtomo
