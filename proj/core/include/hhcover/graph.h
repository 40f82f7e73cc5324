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

#ifndef HHCOVER_GRAPH_H_
#define HHCOVER_GRAPH_H_

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hhcover/vertex_set.h"

namespace hhcover {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph over labels {0, ..., n-1}. Only labels in
// vertices() are live; removing a vertex keeps all other labels unchanged.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  VertexSet vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.size(); }

  // Throws kInvalidGraph on loops, kBadIndex on labels outside the live set.
  // Re-adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  int edge_count() const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph remove_vertex(Vertex v) const;
  Graph induced(VertexSet keep) const;
  Graph complement() const;

  // Connected components, each a VertexSet, ordered by lowest member.
  std::vector<VertexSet> components() const;
  // True for graphs with at most one live vertex.
  bool is_connected() const;
  bool is_stable(VertexSet set) const;
  bool is_clique(VertexSet set) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  VertexSet vertices_;
  std::array<VertexSet, kMaxVertices> adjacency_{};
};

// Loopless digraph; at most one arc per ordered pair, 2-cycles allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Edge>& arcs);

  int n() const { return n_; }
  void add_arc(Vertex from, Vertex to);
  bool has_arc(Vertex from, Vertex to) const { return out_[from].contains(to); }
  VertexSet out_neighbors(Vertex v) const { return out_[v]; }
  std::vector<Edge> arcs() const;

  // True iff the subdigraph induced by `set` has no directed cycle.
  bool is_acyclic(VertexSet set) const;

  // Symmetric digraph with both arcs for every edge of g.
  static Digraph FromGraph(const Graph& g);

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> out_{};
};

// Undirected graph with a weight per edge.
struct WeightedGraph {
  Graph graph;
  std::map<Edge, double> weight;  // keyed by (u, v) with u < v
};

// Named fixtures.
Graph CycleGraph(int n);
Graph PathGraph(int n);
Graph CompleteGraph(int n);
Graph EmptyGraph(int n);
Graph PetersenGraph();
// k triangles sharing vertex 0; 2k+1 vertices.
Graph FriendshipGraph(int k);
// Triangles {0,1,2}, {3,4,5} joined by the matching 0-3, 1-4, 2-5.
Graph PrismGraph();
// Cycle 0..n-2 plus hub n-1 adjacent to all of it.
Graph WheelGraph(int rim);
Graph DisjointUnion(const Graph& a, const Graph& b);

Digraph DirectedCycle(int n);
Digraph CompleteDigraph(int n);
// Arc i -> j for all i < j.
Digraph TransitiveTournament(int n);

}  // namespace hhcover

#endif  // HHCOVER_GRAPH_H_
