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

#ifndef HHCOVER_FAMILIES_H_
#define HHCOVER_FAMILIES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hhcover/graph.h"
#include "hhcover/hypergraph.h"
#include "hhcover/oracle.h"

namespace hhcover {

// Sets U such that the subgraph induced by U has no induced copy of any
// pattern. Patterns must have 2 to 5 vertices: kSingletonExcluded for
// patterns with fewer, kBadPattern for more.
IndependenceOracle ForbiddenSubgraphFamily(const Graph& g,
                                           const std::vector<Graph>& forbidden);
IndependenceOracle ForbiddenSubgraphFamily(
    const Digraph& d, const std::vector<Digraph>& forbidden);

IndependenceOracle StableSetFamily(const Graph& g);
IndependenceOracle CliqueFamily(const Graph& g);

// base restricted to sets of size at most k. Throws kBadK for k < 2.
IndependenceOracle BoundedClassFamily(const IndependenceOracle& base, int k);

// Vertex sets inducing an acyclic subdigraph (2-cycles count as cycles).
IndependenceOracle AcyclicFamily(const Digraph& d);

// Combines the weights of the edges induced by a set. Must be monotone:
// adding weights never decreases the result.
using WeightAggregate = std::function<double(const std::vector<double>&)>;
double SumAggregate(const std::vector<double>& weights);

// Sets U whose induced edge weights aggregate to at most lambda. Throws
// kNegativeWeight for a negative weight and kLambdaTooSmall when the empty
// aggregate already exceeds lambda.
IndependenceOracle ThresholdFamily(const WeightedGraph& g, double lambda,
                                   WeightAggregate aggregate = SumAggregate);

struct GeneratorOptions {
  std::size_t budget = 1'000'000;
  int monotonicity_samples = 1000;
  std::uint64_t seed = 0x5eed;
};

// Inclusion-maximal accepted sets of the oracle, as a hereditary hypergraph.
// Spot-checks monotonicity first (kMonotonicityViolation names the pair)
// and stops with kGeneratorBudgetExceeded past the budget.
HereditaryHypergraph MaximalGenerators(const IndependenceOracle& oracle,
                                       const GeneratorOptions& options = {});

}  // namespace hhcover

#endif  // HHCOVER_FAMILIES_H_
