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

#include "hhcover/families.h"

#include <array>
#include <memory>
#include <random>
#include <string>

#include "hhcover/error.h"

namespace hhcover {
namespace {

constexpr int kMaxPatternVertices = 5;

// Arc structure of a pattern as a small adjacency matrix.
struct Pattern {
  int k = 0;
  std::array<std::array<bool, kMaxPatternVertices>, kMaxPatternVertices> arc{};
};

Pattern MakePattern(const Digraph& d) {
  if (d.n() < 2) {
    throw Error(ErrorCode::kSingletonExcluded,
                "pattern on " + std::to_string(d.n()) +
                    " vertices would exclude singletons");
  }
  if (d.n() > kMaxPatternVertices) {
    throw Error(ErrorCode::kBadPattern, "pattern has " + std::to_string(d.n()) +
                                            " vertices (limit 5)");
  }
  Pattern p;
  p.k = d.n();
  for (const auto& [u, v] : d.arcs()) p.arc[u][v] = true;
  return p;
}

// Tries every injection of the pattern into `set`, extending one pattern
// vertex at a time and checking arcs both ways against earlier images.
class InducedMatcher {
 public:
  InducedMatcher(const Digraph& host, const Pattern& pattern)
      : host_(host), pattern_(pattern) {}

  bool Contains(VertexSet set) {
    if (set.size() < pattern_.k) return false;
    return Extend(0, set);
  }

 private:
  bool Extend(int depth, VertexSet free) {
    if (depth == pattern_.k) return true;
    for (Vertex x : free) {
      bool consistent = true;
      for (int j = 0; j < depth && consistent; ++j) {
        const Vertex y = image_[j];
        consistent = host_.has_arc(x, y) == pattern_.arc[depth][j] &&
                     host_.has_arc(y, x) == pattern_.arc[j][depth];
      }
      if (!consistent) continue;
      image_[depth] = x;
      if (Extend(depth + 1, free.without(x))) return true;
    }
    return false;
  }

  const Digraph& host_;
  const Pattern& pattern_;
  std::array<Vertex, kMaxPatternVertices> image_{};
};

class GeneratorSearch {
 public:
  GeneratorSearch(const IndependenceOracle& oracle, std::size_t budget)
      : oracle_(oracle), n_(oracle.n()), budget_(budget) {}

  std::vector<VertexSet> Run() {
    Recurse(0, VertexSet(), VertexSet());
    return std::move(found_);
  }

 private:
  // `excluded` holds skipped vertices that could still be added; a leaf is
  // maximal only if each of them is blocked by the final set.
  void Recurse(int i, VertexSet chosen, VertexSet excluded) {
    const VertexSet rest = VertexSet::Range(n_) - VertexSet::Range(i);
    for (Vertex j : excluded) {
      if (oracle_(chosen.with(j) | rest)) return;
    }
    if (i == n_) {
      if (found_.size() == budget_) {
        throw Error(ErrorCode::kGeneratorBudgetExceeded,
                    "more than " + std::to_string(budget_) + " generators");
      }
      found_.push_back(chosen);
      return;
    }
    if (oracle_(chosen.with(i))) {
      Recurse(i + 1, chosen.with(i), excluded);
      Recurse(i + 1, chosen, excluded.with(i));
    } else {
      Recurse(i + 1, chosen, excluded);
    }
  }

  const IndependenceOracle& oracle_;
  int n_;
  std::size_t budget_;
  std::vector<VertexSet> found_;
};

void SpotCheckMonotone(const IndependenceOracle& oracle, int samples,
                       std::uint64_t seed) {
  const int n = oracle.n();
  if (n == 0) return;
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = VertexSet::Range(n).bits();
  for (int s = 0; s < samples; ++s) {
    VertexSet big;
    if (s % 2 == 0) {
      big = VertexSet(rng() & mask);
    } else {
      // Grow an accepted set along a random vertex order.
      std::vector<Vertex> order = VertexSet::Range(n).to_vector();
      std::shuffle(order.begin(), order.end(), rng);
      for (Vertex v : order) {
        if ((rng() & 3) != 0 && oracle(big.with(v))) big = big.with(v);
      }
    }
    const VertexSet small(big.bits() & rng());
    if (oracle(big) && !oracle(small)) {
      throw Error(ErrorCode::kMonotonicityViolation,
                  "oracle accepts " + big.to_string() + " but rejects subset " +
                      small.to_string());
    }
  }
}

}  // namespace

IndependenceOracle ForbiddenSubgraphFamily(
    const Digraph& d, const std::vector<Digraph>& forbidden) {
  auto patterns = std::make_shared<std::vector<Pattern>>();
  for (const Digraph& f : forbidden) patterns->push_back(MakePattern(f));
  return IndependenceOracle(
      d.n(),
      [d, patterns](VertexSet set) {
        for (const Pattern& p : *patterns) {
          if (InducedMatcher(d, p).Contains(set)) return false;
        }
        return true;
      },
      "forbidden-subgraphs");
}

IndependenceOracle ForbiddenSubgraphFamily(const Graph& g,
                                           const std::vector<Graph>& forbidden) {
  std::vector<Digraph> symmetric;
  symmetric.reserve(forbidden.size());
  for (const Graph& f : forbidden) symmetric.push_back(Digraph::FromGraph(f));
  return ForbiddenSubgraphFamily(Digraph::FromGraph(g), symmetric);
}

IndependenceOracle StableSetFamily(const Graph& g) {
  return IndependenceOracle(
      g.n(), [g](VertexSet set) { return g.is_stable(set); }, "stable");
}

IndependenceOracle CliqueFamily(const Graph& g) {
  return IndependenceOracle(
      g.n(), [g](VertexSet set) { return g.is_clique(set); }, "clique");
}

IndependenceOracle BoundedClassFamily(const IndependenceOracle& base, int k) {
  if (k < 2) throw Error(ErrorCode::kBadK, "k = " + std::to_string(k));
  return IndependenceOracle(
      base.n(),
      [base, k](VertexSet set) { return set.size() <= k && base(set); },
      base.name() + "-bounded-" + std::to_string(k));
}

IndependenceOracle AcyclicFamily(const Digraph& d) {
  return IndependenceOracle(
      d.n(), [d](VertexSet set) { return d.is_acyclic(set); }, "acyclic");
}

double SumAggregate(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  return total;
}

IndependenceOracle ThresholdFamily(const WeightedGraph& g, double lambda,
                                   WeightAggregate aggregate) {
  for (const auto& [edge, w] : g.weight) {
    if (w < 0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "edge " + std::to_string(edge.first) + " " +
                      std::to_string(edge.second) + " has weight " +
                      std::to_string(w));
    }
  }
  if (aggregate({}) > lambda) {
    throw Error(ErrorCode::kLambdaTooSmall,
                "lambda = " + std::to_string(lambda) + " rejects singletons");
  }
  const std::vector<Edge> edges = g.graph.edges();
  std::vector<double> weights;
  weights.reserve(edges.size());
  for (const Edge& e : edges) {
    auto it = g.weight.find(e);
    weights.push_back(it == g.weight.end() ? 0.0 : it->second);
  }
  return IndependenceOracle(
      g.graph.n(),
      [edges, weights, lambda, aggregate](VertexSet set) {
        std::vector<double> induced;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (set.contains(edges[i].first) && set.contains(edges[i].second)) {
            induced.push_back(weights[i]);
          }
        }
        return aggregate(induced) <= lambda;
      },
      "threshold");
}

HereditaryHypergraph MaximalGenerators(const IndependenceOracle& oracle,
                                       const GeneratorOptions& options) {
  SpotCheckMonotone(oracle, options.monotonicity_samples, options.seed);
  return HereditaryHypergraph::FromHyperedges(
      oracle.n(), GeneratorSearch(oracle, options.budget).Run());
}

}  // namespace hhcover
