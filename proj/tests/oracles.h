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

#ifndef HHCOVER_TESTS_ORACLES_H_
#define HHCOVER_TESTS_ORACLES_H_

// Brute-force reference computations used only by the tests. Nothing here
// calls into the solver code paths under test: hypergraphs are handled as raw
// generator lists, graphs as adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "hhcover/graph.h"
#include "hhcover/hypergraph.h"

namespace hhcover::oracle {

using Mask = std::uint64_t;
using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix Matrix(const Graph& g) {
  AdjMatrix m(g.n(), std::vector<bool>(g.n(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline AdjMatrix Matrix(const Digraph& d) {
  AdjMatrix m(d.n(), std::vector<bool>(d.n(), false));
  for (const auto& [u, v] : d.arcs()) m[u][v] = true;
  return m;
}

inline std::vector<int> Members(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if ((m >> i) & 1U) out.push_back(i);
  }
  return out;
}

// Calls fn(blocks) for every set partition of `elements` (restricted growth
// strings).
inline void ForEachSetPartition(const std::vector<int>& elements,
                                const std::function<void(const std::vector<Mask>&)>& fn) {
  std::vector<Mask> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == elements.size()) {
      fn(blocks);
      return;
    }
    const Mask bit = Mask{1} << elements[i];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      rec(i + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

inline bool InClosure(const std::vector<Mask>& generators, Mask x) {
  if (x == 0) return false;
  for (Mask g : generators) {
    if ((x & ~g) == 0) return true;
  }
  return false;
}

inline std::vector<Mask> RawGenerators(const HereditaryHypergraph& h) {
  std::vector<Mask> out;
  for (VertexSet g : h.generators()) out.push_back(g.bits());
  return out;
}

struct PartitionSummary {
  int rho = 0;
  int min_cover_count = 0;
  int min_covers_with_one_singleton = 0;
  bool singleton_free_min_cover = false;
  int mu_all = 0;  // over all partitions
  int mu_min = 0;  // over minimum partitions
};

// Exhaustive over set partitions of the live vertices.
inline PartitionSummary SummarizePartitions(const std::vector<Mask>& generators,
                                            Mask vertices) {
  PartitionSummary s;
  s.rho = 1 << 30;
  struct Seen {
    int parts;
    int mu;
    int singletons;
  };
  std::vector<Seen> valid;
  ForEachSetPartition(Members(vertices), [&](const std::vector<Mask>& blocks) {
    int mu = 0;
    int singletons = 0;
    for (Mask b : blocks) {
      if (!InClosure(generators, b)) return;
      const int size = static_cast<int>(Members(b).size());
      if (size >= 2) mu += size; else ++singletons;
    }
    valid.push_back({static_cast<int>(blocks.size()), mu, singletons});
    s.rho = std::min(s.rho, static_cast<int>(blocks.size()));
    s.mu_all = std::max(s.mu_all, mu);
  });
  if (vertices == 0) s.rho = 0;
  for (const Seen& v : valid) {
    if (v.parts != s.rho) continue;
    ++s.min_cover_count;
    if (v.singletons == 1) ++s.min_covers_with_one_singleton;
    if (v.singletons == 0) s.singleton_free_min_cover = true;
    s.mu_min = std::max(s.mu_min, v.mu);
  }
  return s;
}

inline int BruteRho(const HereditaryHypergraph& h) {
  return SummarizePartitions(RawGenerators(h), h.vertices().bits()).rho;
}

// Maximum matching size by exhaustive recursion over edges.
inline int BruteNu(const AdjMatrix& adj, Mask alive) {
  const int n = static_cast<int>(adj.size());
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if ((alive >> i) & 1U) { first = i; break; }
  }
  if (first < 0) return 0;
  const Mask rest = alive & ~(Mask{1} << first);
  int best = BruteNu(adj, rest);  // leave `first` unmatched
  for (int j = first + 1; j < n; ++j) {
    if (((rest >> j) & 1U) && adj[first][j]) {
      best = std::max(best, 1 + BruteNu(adj, rest & ~(Mask{1} << j)));
    }
  }
  return best;
}

inline int BruteNu(const Graph& g) { return BruteNu(Matrix(g), g.vertices().bits()); }

// Chromatic number by trying k = 1, 2, ... colors with plain backtracking.
inline int BruteChromatic(const Graph& g) {
  const AdjMatrix adj = Matrix(g);
  const int n = g.n();
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  for (int k = 1; k <= n; ++k) {
    std::function<bool(int)> place = [&](int v) {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = !(adj[u][v] && color[u] == c);
        if (!ok) continue;
        color[v] = c;
        if (place(v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(0)) return k;
  }
  return n;
}

// Directed cycle detection by three-color DFS on the induced subdigraph.
inline bool BruteAcyclic(const AdjMatrix& adj, Mask set) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> state(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (!((set >> w) & 1U) || !adj[v][w]) continue;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v : Members(set)) {
    if (state[v] == 0 && !dfs(v)) return false;
  }
  return true;
}

inline int BruteDichromatic(const Digraph& d) {
  const AdjMatrix adj = Matrix(d);
  int best = d.n();
  std::vector<int> all;
  for (int i = 0; i < d.n(); ++i) all.push_back(i);
  ForEachSetPartition(all, [&](const std::vector<Mask>& blocks) {
    if (static_cast<int>(blocks.size()) >= best) return;
    for (Mask b : blocks) {
      if (!BruteAcyclic(adj, b)) return;
    }
    best = static_cast<int>(blocks.size());
  });
  return best;
}

// Number of antichains of nonempty subsets of {0..n-1} covering all of it,
// by testing every family of nonempty subsets. n <= 4.
inline long CountCoveringAntichains(int n) {
  const int subsets = (1 << n) - 1;
  long count = 0;
  for (Mask family = 0; family < (Mask{1} << subsets); ++family) {
    std::vector<Mask> sets;
    for (int i = 0; i < subsets; ++i) {
      if ((family >> i) & 1U) sets.push_back(static_cast<Mask>(i + 1));
    }
    Mask covered = 0;
    bool antichain = true;
    for (std::size_t a = 0; a < sets.size() && antichain; ++a) {
      covered |= sets[a];
      for (std::size_t b = 0; b < sets.size(); ++b) {
        if (a != b && (sets[a] & ~sets[b]) == 0) { antichain = false; break; }
      }
    }
    if (antichain && covered == (Mask{1} << n) - 1) ++count;
  }
  return count;
}

// Maximal accepted sets of a predicate over {0..n-1}, by listing all subsets.
inline std::vector<Mask> BruteMaximalSets(int n, const std::function<bool(Mask)>& accept) {
  std::vector<Mask> accepted;
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    if (accept(x)) accepted.push_back(x);
  }
  std::vector<Mask> maximal;
  for (Mask x : accepted) {
    bool dominated = false;
    for (Mask y : accepted) {
      if (y != x && (x & ~y) == 0) { dominated = true; break; }
    }
    if (!dominated) maximal.push_back(x);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

inline Graph RandomGraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

inline Digraph RandomDigraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && coin(rng)) d.add_arc(i, j);
    }
  }
  return d;
}

// Random explicit hypergraph on n vertices whose edges cover {0..n-1}.
inline ExplicitHypergraph RandomCoveringHypergraph(int n, int edges, int min_size,
                                                   std::mt19937_64& rng) {
  ExplicitHypergraph h{n, {}};
  std::uniform_int_distribution<int> size(std::min(min_size, n), n);
  Mask covered = 0;
  for (int e = 0; e < edges; ++e) {
    std::vector<int> pool;
    for (int i = 0; i < n; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    Mask m = 0;
    const int s = size(rng);
    for (int i = 0; i < s; ++i) m |= Mask{1} << pool[i];
    h.edges.emplace_back(m);
    covered |= m;
  }
  for (int v = 0; v < n; ++v) {
    if (!((covered >> v) & 1U)) h.edges.push_back(VertexSet::Single(v));
  }
  return h;
}

}  // namespace hhcover::oracle

#endif  // HHCOVER_TESTS_ORACLES_H_
