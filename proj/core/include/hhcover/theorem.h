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

#ifndef HHCOVER_THEOREM_H_
#define HHCOVER_THEOREM_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hhcover/cover.h"
#include "hhcover/hypergraph.h"
#include "hhcover/matching.h"

namespace hhcover {

// h is critical when rho drops by one on deleting any vertex.
struct CriticalityReport {
  int rho = 0;
  std::map<Vertex, int> rho_after_deletion;
  std::vector<Vertex> failing_vertices;  // rho(h - v) == rho(h)
  bool is_critical = false;
};

CriticalityReport CheckCriticality(const HereditaryHypergraph& h);
inline bool IsCritical(const HereditaryHypergraph& h) {
  return CheckCriticality(h).is_critical;
}

// Deletes the smallest vertex whose removal keeps rho until none remains.
// The result is critical and has the same rho.
HereditaryHypergraph CriticalCore(const HereditaryHypergraph& h);

enum class TheoremCase { kNotApplicable, kStrict, kEquality, kViolation };

std::string_view TheoremCaseName(TheoremCase c);

// Classification of a connected critical hereditary hypergraph against the
// bound rho <= (n+1)/2. Strict carries a minimum cover with no singleton;
// Equality carries a factor-critical certificate of the edge graph and one
// structured cover per vertex. Violation means a check failed; `reason`
// names it and the instance is enough to replay.
struct TheoremClassification {
  TheoremCase kind = TheoremCase::kNotApplicable;
  std::string reason;
  int n = 0;
  int rho = 0;
  std::optional<Cover> singleton_free_cover;
  std::optional<FactorCriticalCertificate> certificate;
  std::map<Vertex, Cover> structured_covers;
};

TheoremClassification ClassifyCritical(const HereditaryHypergraph& h);

// {v} plus a perfect matching of edge_graph - v. Throws kNotEqualityCase
// unless h classifies as Equality.
Cover StructuredCover(const HereditaryHypergraph& h, Vertex v);

// The lower-bound form: with n <= 2(rho - 1), h is not critical or not
// connected.
struct GallaiCorollaryReport {
  int n = 0;
  int rho = 0;
  bool condition_met = false;
  bool not_critical = false;
  bool not_connected = false;
  bool holds = true;  // vacuous when the condition is not met
};

GallaiCorollaryReport CheckCorollaryGallai(const HereditaryHypergraph& h);

// Witness for the concrete form: a vertex whose deletion lowers rho, and/or a
// split of V with no 2-element hyperedge across it. Both are filled when both
// exist.
struct ConcreteCorollaryWitness {
  int n = 0;
  int rho = 0;
  std::optional<Vertex> vertex;
  std::optional<std::pair<VertexSet, VertexSet>> bipartition;
  bool holds() const { return vertex.has_value() || bipartition.has_value(); }
};

// Throws kConditionNotMet when n > 2(rho - 1).
ConcreteCorollaryWitness CheckCorollaryConcrete(const HereditaryHypergraph& h);

nlohmann::json ToJson(const CriticalityReport& r);
nlohmann::json ToJson(const TheoremClassification& c);
nlohmann::json ToJson(const GallaiCorollaryReport& r);
nlohmann::json ToJson(const ConcreteCorollaryWitness& w);

}  // namespace hhcover

#endif  // HHCOVER_THEOREM_H_
