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

#include "hhcover/theorem.h"

#include <string>

#include "hhcover/error.h"

namespace hhcover {
namespace {

TheoremClassification Violation(TheoremClassification c, std::string reason) {
  c.kind = TheoremCase::kViolation;
  c.reason = std::move(reason);
  return c;
}

nlohmann::json VertexOrNull(const std::optional<Vertex>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string_view TheoremCaseName(TheoremCase c) {
  switch (c) {
    case TheoremCase::kNotApplicable: return "NotApplicable";
    case TheoremCase::kStrict: return "Strict";
    case TheoremCase::kEquality: return "Equality";
    case TheoremCase::kViolation: return "Violation";
  }
  return "Unknown";
}

CriticalityReport CheckCriticality(const HereditaryHypergraph& h) {
  CriticalityReport r;
  r.rho = Rho(h);
  r.rho_after_deletion = RhoAfterEachDeletion(h);
  for (const auto& [v, after] : r.rho_after_deletion) {
    if (after == r.rho) r.failing_vertices.push_back(v);
  }
  r.is_critical = r.failing_vertices.empty();
  return r;
}

HereditaryHypergraph CriticalCore(const HereditaryHypergraph& h) {
  HereditaryHypergraph current = h;
  const int rho = Rho(h);
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (Vertex v : current.vertices()) {
      HereditaryHypergraph smaller = current.delete_vertex(v);
      if (Rho(smaller) == rho) {
        current = std::move(smaller);
        deleted = true;
        break;
      }
    }
  }
  return current;
}

TheoremClassification ClassifyCritical(const HereditaryHypergraph& h) {
  TheoremClassification c;
  c.n = h.vertex_count();
  if (c.n == 0) {
    c.reason = "empty hypergraph";
    return c;
  }
  if (!h.is_connected()) {
    c.reason = "not connected";
    return c;
  }
  const CriticalityReport crit = CheckCriticality(h);
  c.rho = crit.rho;
  if (!crit.is_critical) {
    c.reason = "not critical";
    return c;
  }
  if (2 * c.rho > c.n + 1) {
    return Violation(std::move(c), "rho = " + std::to_string(c.rho) +
                                       " exceeds (n+1)/2 with n = " +
                                       std::to_string(c.n));
  }

  SingletonFreeResult free = HasSingletonFreeMinCover(h);
  if (free.exists) {
    const Cover& w = *free.witness;
    if (!IsValidCover(h, w) || w.size() != c.rho || w.singleton_count() != 0) {
      return Violation(std::move(c), "singleton-free witness fails validation");
    }
    c.kind = TheoremCase::kStrict;
    c.singleton_free_cover = w;
    return c;
  }

  if (2 * c.rho != c.n + 1) {
    return Violation(std::move(c),
                     "every minimum cover has a singleton but rho = " +
                         std::to_string(c.rho) + " < (n+1)/2");
  }
  const Graph edges = h.edge_graph();
  auto cert = FactorCritical(edges);
  if (!cert || !ValidateCertificate(edges, *cert)) {
    return Violation(std::move(c), "edge graph is not factor-critical");
  }
  for (const auto& [v, matching] : cert->near_perfect) {
    Cover cover;
    cover.parts.push_back(VertexSet::Single(v));
    for (const auto& [a, b] : matching.edges) {
      cover.parts.push_back(VertexSet{a, b});
    }
    cover.normalize();
    if (!IsValidCover(h, cover) || cover.size() != c.rho) {
      return Violation(std::move(c), "structured cover for vertex " +
                                         std::to_string(v) + " is invalid");
    }
    c.structured_covers.emplace(v, std::move(cover));
  }
  c.kind = TheoremCase::kEquality;
  c.certificate = std::move(cert);
  return c;
}

Cover StructuredCover(const HereditaryHypergraph& h, Vertex v) {
  if (v < 0 || v >= h.n() || !h.vertices().contains(v)) {
    throw Error(ErrorCode::kBadIndex, "vertex " + std::to_string(v));
  }
  TheoremClassification c = ClassifyCritical(h);
  if (c.kind != TheoremCase::kEquality) {
    throw Error(ErrorCode::kNotEqualityCase,
                std::string(TheoremCaseName(c.kind)) +
                    (c.reason.empty() ? "" : ": " + c.reason));
  }
  return c.structured_covers.at(v);
}

GallaiCorollaryReport CheckCorollaryGallai(const HereditaryHypergraph& h) {
  GallaiCorollaryReport r;
  r.n = h.vertex_count();
  r.rho = Rho(h);
  r.condition_met = r.n <= 2 * (r.rho - 1);
  if (r.condition_met) {
    r.not_critical = !IsCritical(h);
    r.not_connected = !h.is_connected();
    r.holds = r.not_critical || r.not_connected;
  }
  return r;
}

ConcreteCorollaryWitness CheckCorollaryConcrete(const HereditaryHypergraph& h) {
  ConcreteCorollaryWitness w;
  w.n = h.vertex_count();
  w.rho = Rho(h);
  if (w.n > 2 * (w.rho - 1)) {
    throw Error(ErrorCode::kConditionNotMet,
                "n = " + std::to_string(w.n) + " > 2(rho - 1) = " +
                    std::to_string(2 * (w.rho - 1)));
  }
  for (Vertex v : h.vertices()) {
    if (Rho(h.delete_vertex(v)) == w.rho - 1) {
      w.vertex = v;
      break;
    }
  }
  const std::vector<VertexSet> comps = h.components();
  if (comps.size() > 1) {
    w.bipartition = std::make_pair(comps.front(), h.vertices() - comps.front());
  }
  return w;
}

nlohmann::json ToJson(const CriticalityReport& r) {
  nlohmann::json after = nlohmann::json::object();
  for (const auto& [v, rho] : r.rho_after_deletion) after[std::to_string(v)] = rho;
  return {{"rho", r.rho},
          {"is_critical", r.is_critical},
          {"failing_vertices", r.failing_vertices},
          {"rho_after_deletion", after}};
}

nlohmann::json ToJson(const TheoremClassification& c) {
  nlohmann::json out;
  out["case"] = TheoremCaseName(c.kind);
  out["reason"] = c.reason;
  out["n"] = c.n;
  out["rho"] = c.rho;
  if (c.singleton_free_cover) out["witness"] = ToJson(*c.singleton_free_cover);
  if (c.certificate) out["certificate"] = ToJson(*c.certificate);
  if (!c.structured_covers.empty()) {
    nlohmann::json covers = nlohmann::json::object();
    for (const auto& [v, cover] : c.structured_covers) {
      covers[std::to_string(v)] = ToJson(cover);
    }
    out["structured_covers"] = covers;
  }
  return out;
}

nlohmann::json ToJson(const GallaiCorollaryReport& r) {
  return {{"n", r.n},
          {"rho", r.rho},
          {"condition_met", r.condition_met},
          {"not_critical", r.not_critical},
          {"not_connected", r.not_connected},
          {"holds", r.holds}};
}

nlohmann::json ToJson(const ConcreteCorollaryWitness& w) {
  nlohmann::json out{{"n", w.n},
                     {"rho", w.rho},
                     {"vertex", VertexOrNull(w.vertex)},
                     {"holds", w.holds()}};
  if (w.bipartition) {
    out["bipartition"] = {w.bipartition->first.to_vector(),
                          w.bipartition->second.to_vector()};
  } else {
    out["bipartition"] = nullptr;
  }
  return out;
}

}  // namespace hhcover
