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

#ifndef HHCOVER_HYPERGRAPH_H_
#define HHCOVER_HYPERGRAPH_H_

#include <vector>

#include "hhcover/graph.h"
#include "hhcover/oracle.h"
#include "hhcover/vertex_set.h"

namespace hhcover {

// A hypergraph given by its full hyperedge list, with no closure implied.
// Used for duals, transversals and the closure-invariance check.
struct ExplicitHypergraph {
  int n = 0;
  std::vector<VertexSet> edges;

  bool operator==(const ExplicitHypergraph&) const = default;
};

// A hereditary hypergraph stored by its generator antichain: a nonempty set
// X is a hyperedge iff X is contained in some generator.
//
// Vertex labels live in {0, ..., n-1}. Deleting a vertex keeps every other
// label, so vertices() may be a proper subset of that range. The generators
// always cover vertices(), form an antichain and are nonempty; they are kept
// sorted lexicographically so equal hypergraphs compare equal.
class HereditaryHypergraph {
 public:
  HereditaryHypergraph() = default;

  // Normalizes `hyperedges` to its inclusion-maximal members. Empty input
  // sets are ignored. Throws kTooManyVertices for n > 64, kBadIndex for a
  // member >= n and kUncoveredVertex for a vertex of {0..n-1} in no
  // hyperedge.
  static HereditaryHypergraph FromHyperedges(
      int n, const std::vector<VertexSet>& hyperedges);

  // Same, over an explicit live vertex set.
  static HereditaryHypergraph FromHyperedges(
      int n, VertexSet vertices, const std::vector<VertexSet>& hyperedges);

  int n() const { return n_; }
  VertexSet vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.size(); }
  const std::vector<VertexSet>& generators() const { return generators_; }
  int max_generator_size() const;

  bool is_hyperedge(VertexSet set) const;

  // Removes v from every generator and re-normalizes. Labels are preserved.
  HereditaryHypergraph delete_vertex(Vertex v) const;

  // The restriction to `keep`: generators intersected with it.
  HereditaryHypergraph induced(VertexSet keep) const;

  // The graph of 2-element hyperedges, on the same live vertices.
  Graph edge_graph() const;

  std::vector<VertexSet> components() const;
  bool is_connected() const;

  ExplicitHypergraph generator_list() const { return {n_, generators_}; }

  bool operator==(const HereditaryHypergraph&) const = default;

 private:
  int n_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> generators_;
};

// Inclusion-maximal members of `sets`, deduplicated, sorted lexicographically.
std::vector<VertexSet> MaximalSets(std::vector<VertexSet> sets);

// {V \ e : e in E}.
ExplicitHypergraph Dual(const ExplicitHypergraph& h);

// S contains no hyperedge.
bool IsStable(const ExplicitHypergraph& h, VertexSet set);
// S meets every hyperedge.
bool IsTransversal(const ExplicitHypergraph& h, VertexSet set);

// Oracle for the stable sets of h. Throws kSingletonExcluded when h has a
// hyperedge of size at most one, since some singleton would then be rejected.
IndependenceOracle StableSets(const ExplicitHypergraph& h);

}  // namespace hhcover

#endif  // HHCOVER_HYPERGRAPH_H_
