// Copyright 2026 The hhcover Authors.
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

#include "hhcover/error.h"

namespace hhcover {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kTooManyVertices: return "TooManyVertices";
    case ErrorCode::kUncoveredVertex: return "UncoveredVertex";
    case ErrorCode::kNotEqualityCase: return "NotEqualityCase";
    case ErrorCode::kConditionNotMet: return "ConditionNotMet";
    case ErrorCode::kSingletonExcluded: return "SingletonExcluded";
    case ErrorCode::kBadPattern: return "BadPattern";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kLambdaTooSmall: return "LambdaTooSmall";
    case ErrorCode::kMonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::kGeneratorBudgetExceeded: return "GeneratorBudgetExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace hhcover
