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

#include "hhcover/matching.h"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace hhcover {
namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm with explicit base tracking, one BFS per
// exposed root. Adjacency is scanned in increasing label order.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : g_(g) { mate_.fill(kNone); }

  Matching Run() {
    for (Vertex root : g_.vertices()) {
      if (mate_[root] != kNone) continue;
      const int end = FindAugmentingPath(root);
      if (end != kNone) Augment(end);
    }
    Matching m;
    for (Vertex v : g_.vertices()) {
      if (mate_[v] != kNone && v < mate_[v]) {
        m.edges.emplace_back(v, mate_[v]);
        m.covered = m.covered.with(v).with(mate_[v]);
      }
    }
    return m;
  }

 private:
  Vertex LowestCommonAncestor(Vertex a, Vertex b) {
    std::array<bool, kMaxVertices> seen{};
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(Vertex v, Vertex b, Vertex child,
                std::array<bool, kMaxVertices>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int FindAugmentingPath(Vertex root) {
    std::array<bool, kMaxVertices> used{};
    parent_.fill(kNone);
    for (Vertex v : g_.vertices()) base_[v] = v;
    used[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const Vertex b = LowestCommonAncestor(v, to);
          std::array<bool, kMaxVertices> in_blossom{};
          MarkPath(v, b, to, in_blossom);
          MarkPath(to, b, v, in_blossom);
          for (Vertex i : g_.vertices()) {
            if (in_blossom[base_[i]]) {
              base_[i] = b;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  void Augment(Vertex v) {
    while (v != kNone) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  std::array<int, kMaxVertices> mate_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
};

}  // namespace

bool IsValidMatching(const Graph& g, const Matching& m) {
  VertexSet seen;
  for (const auto& [u, v] : m.edges) {
    if (u == v || !g.vertices().contains(u) || !g.vertices().contains(v) ||
        !g.has_edge(u, v)) {
      return false;
    }
    if (seen.contains(u) || seen.contains(v)) return false;
    seen = seen.with(u).with(v);
  }
  return seen == m.covered;
}

Matching MaxMatching(const Graph& g) { return BlossomMatcher(g).Run(); }

bool ValidateCertificate(const Graph& g, const FactorCriticalCertificate& cert) {
  if (static_cast<int>(cert.near_perfect.size()) != g.vertex_count()) {
    return false;
  }
  for (Vertex v : g.vertices()) {
    auto it = cert.near_perfect.find(v);
    if (it == cert.near_perfect.end()) return false;
    const Graph rest = g.remove_vertex(v);
    if (!IsValidMatching(rest, it->second)) return false;
    if (it->second.covered != g.vertices().without(v)) return false;
  }
  return true;
}

std::optional<FactorCriticalCertificate> FactorCritical(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || n % 2 == 0 || !g.is_connected()) return std::nullopt;
  FactorCriticalCertificate cert;
  for (Vertex v : g.vertices()) {
    Matching m = MaxMatching(g.remove_vertex(v));
    if (2 * m.size() != n - 1) return std::nullopt;
    cert.near_perfect.emplace(v, std::move(m));
  }
  return cert;
}

GallaiLemmaReport VerifyGallaiLemma(const Graph& g) {
  GallaiLemmaReport r;
  r.vertex_count = g.vertex_count();
  r.nu = MaxMatching(g).size();
  r.connected = g.is_connected();
  for (Vertex v : g.vertices()) {
    Matching m = MaxMatching(g.remove_vertex(v));
    if (m.size() < r.nu && !r.dropping_vertex) r.dropping_vertex = v;
    r.witnesses.emplace(v, std::move(m));
  }
  r.hypotheses_hold = r.connected && !r.dropping_vertex && r.vertex_count > 0;
  if (r.hypotheses_hold) {
    r.conclusion_holds = 2 * r.nu == r.vertex_count - 1;
    r.summary = r.conclusion_holds
                    ? "hypotheses hold; nu = " + std::to_string(r.nu) +
                          " = (n-1)/2"
                    : "VIOLATION: hypotheses hold but nu = " +
                          std::to_string(r.nu) + " with n = " +
                          std::to_string(r.vertex_count);
  } else if (r.vertex_count == 0) {
    r.summary = "not applicable: empty graph";
  } else if (!r.connected) {
    r.summary = "not applicable: graph is not connected";
  } else {
    r.summary = "not applicable: nu(G - " + std::to_string(*r.dropping_vertex) +
                ") = " +
                std::to_string(r.witnesses.at(*r.dropping_vertex).size()) +
                " < nu(G) = " + std::to_string(r.nu);
  }
  return r;
}

nlohmann::json ToJson(const Matching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : m.edges) edges.push_back({u, v});
  return edges;
}

nlohmann::json ToJson(const FactorCriticalCertificate& cert) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [v, m] : cert.near_perfect) {
    out[std::to_string(v)] = ToJson(m);
  }
  return out;
}

nlohmann::json ToJson(const GallaiLemmaReport& r) {
  nlohmann::json out;
  out["n"] = r.vertex_count;
  out["nu"] = r.nu;
  out["connected"] = r.connected;
  out["dropping_vertex"] = r.dropping_vertex ? nlohmann::json(*r.dropping_vertex)
                                             : nlohmann::json(nullptr);
  out["hypotheses_hold"] = r.hypotheses_hold;
  out["conclusion_holds"] = r.conclusion_holds;
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [v, m] : r.witnesses) witnesses[std::to_string(v)] = ToJson(m);
  out["witnesses"] = witnesses;
  out["summary"] = r.summary;
  return out;
}

}  // namespace hhcover
