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

#include "hhcover/oracle.h"

#include <string>

#include "hhcover/error.h"

namespace hhcover {

IndependenceOracle::IndependenceOracle(int n, Predicate predicate,
                                       std::string name)
    : n_(n), predicate_(std::move(predicate)), name_(std::move(name)) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "n = " + std::to_string(n) + " (limit 64)");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!predicate_(VertexSet::Single(v))) {
      throw Error(ErrorCode::kSingletonExcluded,
                  "oracle rejects singleton {" + std::to_string(v) + "}");
    }
  }
}

}  // namespace hhcover
