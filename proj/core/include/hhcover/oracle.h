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

#ifndef HHCOVER_ORACLE_H_
#define HHCOVER_ORACLE_H_

#include <functional>
#include <string>
#include <utility>

#include "hhcover/vertex_set.h"

namespace hhcover {

// A monotone decreasing predicate on subsets of {0, ..., n-1}: the
// independence system it describes is a hereditary hypergraph. Every
// singleton must be accepted; construction fails with kSingletonExcluded
// otherwise.
class IndependenceOracle {
 public:
  using Predicate = std::function<bool(VertexSet)>;

  IndependenceOracle(int n, Predicate predicate, std::string name = "");

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  bool operator()(VertexSet set) const { return predicate_(set); }

 private:
  int n_;
  Predicate predicate_;
  std::string name_;
};

}  // namespace hhcover

#endif  // HHCOVER_ORACLE_H_
