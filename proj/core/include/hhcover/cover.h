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

#ifndef HHCOVER_COVER_H_
#define HHCOVER_COVER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "hhcover/hypergraph.h"
#include "hhcover/vertex_set.h"

namespace hhcover {

// A partition of the live vertices into hyperedges. Parts are kept in
// canonical order (size descending, then lexicographic).
struct Cover {
  std::vector<VertexSet> parts;

  int size() const { return static_cast<int>(parts.size()); }
  int singleton_count() const;
  // Vertices lying in parts of size >= 2.
  int non_singleton_vertices() const;
  void normalize();

  bool operator==(const Cover&) const = default;
};

// Parts nonempty, pairwise disjoint, union = h.vertices(), each a hyperedge.
bool IsValidCover(const HereditaryHypergraph& h, const Cover& cover);

struct MinCoverResult {
  int rho = 0;
  Cover witness;
};

// Exact minimum cover by branch and bound.
MinCoverResult MinCover(const HereditaryHypergraph& h);
inline int Rho(const HereditaryHypergraph& h) { return MinCover(h).rho; }

// rho(h - v) for every live v. Throws std::logic_error if any value leaves
// [rho(h) - 1, rho(h)].
std::map<Vertex, int> RhoAfterEachDeletion(const HereditaryHypergraph& h);

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

struct CoverEnumeration {
  int rho = 0;
  std::vector<Cover> covers;
  bool truncated = false;
};

// All partitions of the vertices into rho hyperedges, at most `limit` of
// them, in a fixed order.
CoverEnumeration EnumerateMinCovers(const HereditaryHypergraph& h,
                                    std::size_t limit = kDefaultEnumerationLimit);

struct SingletonFreeResult {
  bool exists = false;
  std::optional<Cover> witness;
};

// Whether some minimum cover has no part of size one.
SingletonFreeResult HasSingletonFreeMinCover(const HereditaryHypergraph& h);

struct MuResult {
  int mu = 0;
  Cover witness;
};

// Maximum number of vertices in parts of size >= 2, over all partitions into
// hyperedges, or over minimum ones when `over_min_covers` is set. Exact
// search memoized on the uncovered set.
MuResult Mu(const HereditaryHypergraph& h, bool over_min_covers);

struct CoverStats {
  int rho = 0;
  int mu = 0;
  bool has_singleton_free_min_cover = false;
};
CoverStats ComputeCoverStats(const HereditaryHypergraph& h);

// Minimum number of members of e.edges whose union is {0..n-1}, overlaps
// allowed. Returns -1 if the edges do not cover.
int ExplicitSetCoverNumber(const ExplicitHypergraph& e);

// Compares the set-cover number of e against rho of its hereditary closure.
// Always true for a correct solver.
bool RhoClosureInvarianceCheck(const ExplicitHypergraph& e);

nlohmann::json ToJson(const Cover& cover);

}  // namespace hhcover

#endif  // HHCOVER_COVER_H_
