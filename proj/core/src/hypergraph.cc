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

#include "hhcover/hypergraph.h"

#include <algorithm>
#include <string>

#include "hhcover/error.h"

namespace hhcover {

std::vector<VertexSet> MaximalSets(std::vector<VertexSet> sets) {
  // Larger sets first, so a set is maximal iff no kept set contains it.
  std::sort(sets.begin(), sets.end(), BySizeThenLex);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    if (s.empty()) continue;
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) {
      return s.is_subset_of(k);
    });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), Lex);
  return kept;
}

HereditaryHypergraph HereditaryHypergraph::FromHyperedges(
    int n, const std::vector<VertexSet>& hyperedges) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "n = " + std::to_string(n) + " (limit 64)");
  }
  return FromHyperedges(n, VertexSet::Range(n), hyperedges);
}

HereditaryHypergraph HereditaryHypergraph::FromHyperedges(
    int n, VertexSet vertices, const std::vector<VertexSet>& hyperedges) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "n = " + std::to_string(n) + " (limit 64)");
  }
  if (!vertices.is_subset_of(VertexSet::Range(n))) {
    throw Error(ErrorCode::kBadIndex, "vertex set " + vertices.to_string() +
                                          " exceeds n = " + std::to_string(n));
  }
  VertexSet covered;
  for (VertexSet e : hyperedges) {
    if (!e.is_subset_of(vertices)) {
      throw Error(ErrorCode::kBadIndex,
                  "hyperedge " + e.to_string() + " has a member outside " +
                      vertices.to_string());
    }
    covered |= e;
  }
  if (covered != vertices) {
    throw Error(ErrorCode::kUncoveredVertex,
                "vertex " + std::to_string((vertices - covered).front()) +
                    " lies in no hyperedge");
  }
  HereditaryHypergraph h;
  h.n_ = n;
  h.vertices_ = vertices;
  h.generators_ = MaximalSets(hyperedges);
  return h;
}

int HereditaryHypergraph::max_generator_size() const {
  int best = 0;
  for (VertexSet g : generators_) best = std::max(best, g.size());
  return best;
}

bool HereditaryHypergraph::is_hyperedge(VertexSet set) const {
  if (set.empty()) return false;
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](VertexSet g) { return set.is_subset_of(g); });
}

HereditaryHypergraph HereditaryHypergraph::delete_vertex(Vertex v) const {
  if (v < 0 || v >= n_ || !vertices_.contains(v)) {
    throw Error(ErrorCode::kBadIndex,
                "vertex " + std::to_string(v) + " is not live");
  }
  return induced(vertices_.without(v));
}

HereditaryHypergraph HereditaryHypergraph::induced(VertexSet keep) const {
  std::vector<VertexSet> restricted;
  restricted.reserve(generators_.size());
  for (VertexSet g : generators_) restricted.push_back(g & keep);
  return FromHyperedges(n_, vertices_ & keep, restricted);
}

Graph HereditaryHypergraph::edge_graph() const {
  Graph g = Graph(n_).induced(vertices_);
  for (VertexSet gen : generators_) {
    for (Vertex u : gen) {
      for (Vertex w : gen) {
        if (u < w) g.add_edge(u, w);
      }
    }
  }
  return g;
}

std::vector<VertexSet> HereditaryHypergraph::components() const {
  return edge_graph().components();
}

bool HereditaryHypergraph::is_connected() const {
  return components().size() <= 1;
}

ExplicitHypergraph Dual(const ExplicitHypergraph& h) {
  const VertexSet all = VertexSet::Range(h.n);
  ExplicitHypergraph out{h.n, {}};
  out.edges.reserve(h.edges.size());
  for (VertexSet e : h.edges) out.edges.push_back(all - e);
  return out;
}

bool IsStable(const ExplicitHypergraph& h, VertexSet set) {
  return std::none_of(h.edges.begin(), h.edges.end(),
                      [&](VertexSet e) { return e.is_subset_of(set); });
}

bool IsTransversal(const ExplicitHypergraph& h, VertexSet set) {
  return std::all_of(h.edges.begin(), h.edges.end(),
                     [&](VertexSet e) { return e.intersects(set); });
}

IndependenceOracle StableSets(const ExplicitHypergraph& h) {
  for (VertexSet e : h.edges) {
    if (e.size() <= 1) {
      throw Error(ErrorCode::kSingletonExcluded,
                  "hyperedge " + e.to_string() + " makes a singleton unstable");
    }
  }
  return IndependenceOracle(
      h.n, [h](VertexSet s) { return IsStable(h, s); }, "stable-sets");
}

}  // namespace hhcover
