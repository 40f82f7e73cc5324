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

#include "hhcover/cover.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace hhcover {
namespace {

// Inclusion-maximal sets g & uncovered over generators g containing v,
// ordered by size descending then lexicographically.
std::vector<VertexSet> MaximalPartsContaining(const HereditaryHypergraph& h,
                                              VertexSet uncovered, Vertex v) {
  std::vector<VertexSet> parts;
  for (VertexSet g : h.generators()) {
    if (g.contains(v)) parts.push_back(g & uncovered);
  }
  parts = MaximalSets(std::move(parts));
  std::sort(parts.begin(), parts.end(), BySizeThenLex);
  return parts;
}

// Every hyperedge S with v in S and S inside `uncovered`, same order.
std::vector<VertexSet> AllPartsContaining(const HereditaryHypergraph& h,
                                          VertexSet uncovered, Vertex v) {
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> parts;
  const VertexSet self = VertexSet::Single(v);
  for (VertexSet m : MaximalPartsContaining(h, uncovered, v)) {
    auto add = [&](VertexSet s) {
      if (seen.insert(s).second) parts.push_back(s);
    };
    add(self);
    ForEachNonemptySubset(m.without(v), [&](VertexSet s) { add(s | self); });
  }
  std::sort(parts.begin(), parts.end(), BySizeThenLex);
  return parts;
}

// Lower bound on the parts needed for `uncovered`: vertices with no
// 2-element hyperedge inside `uncovered` need a part each, and the rest need
// at least ceil(rest / largest part).
int LowerBound(const HereditaryHypergraph& h, VertexSet uncovered) {
  if (uncovered.empty()) return 0;
  VertexSet paired;
  int largest = 1;
  for (VertexSet g : h.generators()) {
    const VertexSet part = g & uncovered;
    if (part.size() >= 2) {
      paired |= part;
      largest = std::max(largest, part.size());
    }
  }
  const int isolated = (uncovered - paired).size();
  const int rest = paired.size();
  return isolated + (rest + largest - 1) / largest;
}

class MinCoverSearch {
 public:
  explicit MinCoverSearch(const HereditaryHypergraph& h)
      : h_(h), best_(h.vertex_count() + 1) {}

  MinCoverResult Run() {
    Search(h_.vertices());
    Cover witness{best_parts_};
    witness.normalize();
    return {static_cast<int>(best_parts_.size()), std::move(witness)};
  }

 private:
  void Search(VertexSet uncovered) {
    const int depth = static_cast<int>(current_.size());
    if (uncovered.empty()) {
      if (depth < best_) {
        best_ = depth;
        best_parts_ = current_;
      }
      return;
    }
    if (depth + LowerBound(h_, uncovered) >= best_) return;
    const Vertex v = uncovered.front();
    for (VertexSet part : MaximalPartsContaining(h_, uncovered, v)) {
      current_.push_back(part);
      Search(uncovered - part);
      current_.pop_back();
      if (depth + LowerBound(h_, uncovered) >= best_) return;
    }
  }

  const HereditaryHypergraph& h_;
  int best_;
  std::vector<VertexSet> best_parts_;
  std::vector<VertexSet> current_;
};

// Depth-first listing of partitions into exactly `target` hyperedges whose
// parts all satisfy `allowed`. `emit` returns false to stop the search.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const HereditaryHypergraph& h, int target,
                      std::function<bool(VertexSet)> allowed,
                      std::function<bool(const Cover&)> emit)
      : h_(h), target_(target), allowed_(std::move(allowed)),
        emit_(std::move(emit)) {}

  void Run() { Search(h_.vertices()); }

 private:
  bool Search(VertexSet uncovered) {
    const int depth = static_cast<int>(current_.size());
    if (uncovered.empty()) {
      if (depth != target_) return true;
      Cover c{current_};
      c.normalize();
      return emit_(c);
    }
    if (depth + LowerBound(h_, uncovered) > target_) return true;
    const Vertex v = uncovered.front();
    for (VertexSet part : AllPartsContaining(h_, uncovered, v)) {
      if (!allowed_(part)) continue;
      current_.push_back(part);
      const bool go_on = Search(uncovered - part);
      current_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const HereditaryHypergraph& h_;
  int target_;
  std::function<bool(VertexSet)> allowed_;
  std::function<bool(const Cover&)> emit_;
  std::vector<VertexSet> current_;
};

int Weight(VertexSet part) { return part.size() >= 2 ? part.size() : 0; }

// Memoized maximum of covered-by-non-singleton vertices. With
// `over_min_covers` the value is lexicographic: fewest parts first.
class MuSearch {
 public:
  MuSearch(const HereditaryHypergraph& h, bool over_min_covers)
      : h_(h), over_min_(over_min_covers) {}

  MuResult Run() {
    const Value best = Solve(h_.vertices());
    Cover witness;
    VertexSet rest = h_.vertices();
    while (!rest.empty()) {
      const VertexSet part = choice_.at(rest);
      witness.parts.push_back(part);
      rest -= part;
    }
    witness.normalize();
    return {best.mu, std::move(witness)};
  }

 private:
  struct Value {
    int parts = 0;
    int mu = 0;
  };

  bool Better(const Value& a, const Value& b) const {
    if (over_min_ && a.parts != b.parts) return a.parts < b.parts;
    return a.mu > b.mu;
  }

  Value Solve(VertexSet uncovered) {
    if (uncovered.empty()) return {};
    if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second;
    const Vertex v = uncovered.front();
    Value best{-1, -1};
    VertexSet best_part;
    for (VertexSet part : AllPartsContaining(h_, uncovered, v)) {
      const Value sub = Solve(uncovered - part);
      const Value candidate{sub.parts + 1, sub.mu + Weight(part)};
      if (best.parts < 0 || Better(candidate, best)) {
        best = candidate;
        best_part = part;
      }
    }
    memo_.emplace(uncovered, best);
    choice_.emplace(uncovered, best_part);
    return best;
  }

  const HereditaryHypergraph& h_;
  bool over_min_;
  std::unordered_map<VertexSet, Value> memo_;
  std::unordered_map<VertexSet, VertexSet> choice_;
};

}  // namespace

int Cover::singleton_count() const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(),
                                        [](VertexSet p) { return p.size() == 1; }));
}

int Cover::non_singleton_vertices() const {
  int total = 0;
  for (VertexSet p : parts) total += Weight(p);
  return total;
}

void Cover::normalize() { std::sort(parts.begin(), parts.end(), BySizeThenLex); }

bool IsValidCover(const HereditaryHypergraph& h, const Cover& cover) {
  VertexSet seen;
  for (VertexSet part : cover.parts) {
    if (part.empty() || part.intersects(seen) || !h.is_hyperedge(part)) {
      return false;
    }
    seen |= part;
  }
  return seen == h.vertices();
}

MinCoverResult MinCover(const HereditaryHypergraph& h) {
  return MinCoverSearch(h).Run();
}

std::map<Vertex, int> RhoAfterEachDeletion(const HereditaryHypergraph& h) {
  const int rho = Rho(h);
  std::map<Vertex, int> out;
  for (Vertex v : h.vertices()) {
    const int after = Rho(h.delete_vertex(v));
    if (after < rho - 1 || after > rho) {
      throw std::logic_error("rho(H - " + std::to_string(v) + ") = " +
                             std::to_string(after) + " outside [" +
                             std::to_string(rho - 1) + ", " +
                             std::to_string(rho) + "]");
    }
    out.emplace(v, after);
  }
  return out;
}

CoverEnumeration EnumerateMinCovers(const HereditaryHypergraph& h,
                                    std::size_t limit) {
  CoverEnumeration result;
  result.rho = Rho(h);
  if (limit == 0) {
    result.truncated = true;
    return result;
  }
  PartitionEnumerator(
      h, result.rho, [](VertexSet) { return true; },
      [&](const Cover& c) {
        if (result.covers.size() == limit) {
          result.truncated = true;
          return false;
        }
        result.covers.push_back(c);
        return true;
      })
      .Run();
  return result;
}

SingletonFreeResult HasSingletonFreeMinCover(const HereditaryHypergraph& h) {
  SingletonFreeResult result;
  PartitionEnumerator(
      h, Rho(h), [](VertexSet part) { return part.size() >= 2; },
      [&](const Cover& c) {
        result.exists = true;
        result.witness = c;
        return false;
      })
      .Run();
  return result;
}

MuResult Mu(const HereditaryHypergraph& h, bool over_min_covers) {
  return MuSearch(h, over_min_covers).Run();
}

CoverStats ComputeCoverStats(const HereditaryHypergraph& h) {
  return {Rho(h), Mu(h, false).mu, HasSingletonFreeMinCover(h).exists};
}

int ExplicitSetCoverNumber(const ExplicitHypergraph& e) {
  const VertexSet all = VertexSet::Range(e.n);
  if (all.empty()) return 0;
  // Breadth-first over covered sets, always extending by a member that
  // covers the lowest uncovered vertex.
  std::unordered_set<VertexSet> seen{VertexSet()};
  std::vector<VertexSet> frontier{VertexSet()};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<VertexSet> next;
    for (VertexSet covered : frontier) {
      const Vertex v = (all - covered).front();
      for (VertexSet edge : e.edges) {
        if (!edge.contains(v)) continue;
        const VertexSet grown = (covered | edge) & all;
        if (grown == all) return depth;
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

bool RhoClosureInvarianceCheck(const ExplicitHypergraph& e) {
  const int explicit_rho = ExplicitSetCoverNumber(e);
  if (explicit_rho < 0) return false;
  return explicit_rho == Rho(HereditaryHypergraph::FromHyperedges(e.n, e.edges));
}

nlohmann::json ToJson(const Cover& cover) {
  nlohmann::json parts = nlohmann::json::array();
  for (VertexSet p : cover.parts) parts.push_back(p.to_vector());
  return parts;
}

}  // namespace hhcover
