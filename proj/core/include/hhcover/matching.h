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

#ifndef HHCOVER_MATCHING_H_
#define HHCOVER_MATCHING_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hhcover/graph.h"
#include "hhcover/vertex_set.h"

namespace hhcover {

struct Matching {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted
  VertexSet covered;

  int size() const { return static_cast<int>(edges.size()); }
  bool operator==(const Matching&) const = default;
};

// Checks pairwise disjointness, that `covered` is the endpoint union, and
// that every edge belongs to g.
bool IsValidMatching(const Graph& g, const Matching& m);

// Maximum cardinality matching via Edmonds' blossom algorithm. Vertices are
// scanned in increasing label order, so the result is deterministic.
Matching MaxMatching(const Graph& g);

// For every vertex v, a matching of g - v covering all other vertices.
struct FactorCriticalCertificate {
  std::map<Vertex, Matching> near_perfect;
};

// True iff `cert` has an entry for every live vertex of g and each entry is a
// valid matching of g - v covering exactly V \ {v}.
bool ValidateCertificate(const Graph& g, const FactorCriticalCertificate& cert);

// g is factor-critical iff it is connected with an odd number of vertices and
// g - v has a perfect matching for every v. The single-vertex graph counts;
// the empty graph does not. The certificate is returned only on success.
std::optional<FactorCriticalCertificate> FactorCritical(const Graph& g);
inline bool IsFactorCritical(const Graph& g) {
  return FactorCritical(g).has_value();
}

// Outcome of checking Gallai's lemma on one graph: if g is connected and
// removing any single vertex leaves the matching number unchanged, then the
// matching number is (n-1)/2.
struct GallaiLemmaReport {
  int vertex_count = 0;
  int nu = 0;
  bool connected = false;
  // First vertex v (in label order) with nu(g - v) < nu(g), if any.
  std::optional<Vertex> dropping_vertex;
  bool hypotheses_hold = false;
  // Meaningful only when hypotheses_hold: nu == (n-1)/2.
  bool conclusion_holds = false;
  std::map<Vertex, Matching> witnesses;  // max matching of g - v, per v
  std::string summary;
};

GallaiLemmaReport VerifyGallaiLemma(const Graph& g);

nlohmann::json ToJson(const Matching& m);
// {"<v>": [[a,b], ...], ...}
nlohmann::json ToJson(const FactorCriticalCertificate& cert);
nlohmann::json ToJson(const GallaiLemmaReport& report);

}  // namespace hhcover

#endif  // HHCOVER_MATCHING_H_
