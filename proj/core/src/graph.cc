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

#include "hhcover/graph.h"

#include <string>

#include "hhcover/error.h"

namespace hhcover {
namespace {

void CheckVertexCount(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "n = " + std::to_string(n) + " (limit 64)");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  CheckVertexCount(n);
  vertices_ = VertexSet::Range(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !vertices_.contains(u) ||
      !vertices_.contains(v)) {
    throw Error(ErrorCode::kBadIndex, "edge " + std::to_string(u) + " " +
                                          std::to_string(v));
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidGraph, "loop at " + std::to_string(u));
  }
  adjacency_[u] = adjacency_[u].with(v);
  adjacency_[v] = adjacency_[v].with(u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return adjacency_[u].contains(v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (Vertex v : vertices_) twice += adjacency_[v].size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u : vertices_) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::remove_vertex(Vertex v) const {
  return induced(vertices_.without(v));
}

Graph Graph::induced(VertexSet keep) const {
  Graph out = *this;
  out.vertices_ = vertices_ & keep;
  for (int v = 0; v < n_; ++v) {
    out.adjacency_[v] =
        out.vertices_.contains(v) ? adjacency_[v] & out.vertices_ : VertexSet();
  }
  return out;
}

Graph Graph::complement() const {
  Graph out = *this;
  for (Vertex v : vertices_) {
    out.adjacency_[v] = (vertices_ - adjacency_[v]).without(v);
  }
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices_;
  while (!unseen.empty()) {
    VertexSet component = VertexSet::Single(unseen.front());
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adjacency_[v];
      frontier = next - component;
      component |= frontier;
    }
    out.push_back(component);
    unseen -= component;
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::is_stable(VertexSet set) const {
  for (Vertex v : set) {
    if (adjacency_[v].intersects(set)) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet set) const {
  for (Vertex v : set) {
    if (!(set.without(v)).is_subset_of(adjacency_[v])) return false;
  }
  return true;
}

Digraph::Digraph(int n) : n_(n) { CheckVertexCount(n); }

Digraph::Digraph(int n, const std::vector<Edge>& arcs) : Digraph(n) {
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

void Digraph::add_arc(Vertex from, Vertex to) {
  if (from < 0 || to < 0 || from >= n_ || to >= n_) {
    throw Error(ErrorCode::kBadIndex, "arc " + std::to_string(from) + " " +
                                          std::to_string(to));
  }
  if (from == to) {
    throw Error(ErrorCode::kInvalidGraph, "loop at " + std::to_string(from));
  }
  out_[from] = out_[from].with(to);
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  }
  return out;
}

bool Digraph::is_acyclic(VertexSet set) const {
  // Peel off vertices with no out-arc inside the remaining set.
  VertexSet rest = set;
  bool progress = true;
  while (!rest.empty() && progress) {
    progress = false;
    for (Vertex v : rest) {
      if (!out_[v].intersects(rest)) {
        rest = rest.without(v);
        progress = true;
      }
    }
  }
  return rest.empty();
}

Digraph Digraph::FromGraph(const Graph& g) {
  Digraph d(g.n());
  for (const auto& [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

Graph CycleGraph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph PathGraph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph CompleteGraph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph EmptyGraph(int n) { return Graph(n); }

Graph PetersenGraph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph FriendshipGraph(int k) {
  Graph g(2 * k + 1);
  for (int t = 0; t < k; ++t) {
    const int a = 2 * t + 1;
    g.add_edge(0, a);
    g.add_edge(0, a + 1);
    g.add_edge(a, a + 1);
  }
  return g;
}

Graph PrismGraph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                   {0, 3}, {1, 4}, {2, 5}});
}

Graph WheelGraph(int rim) {
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  return g;
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

Digraph DirectedCycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

Digraph CompleteDigraph(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) d.add_arc(i, j);
    }
  }
  return d;
}

Digraph TransitiveTournament(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  }
  return d;
}

}  // namespace hhcover
