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

#include <algorithm>

#include <gtest/gtest.h>

#include "hhcover/error.h"
#include "hhcover/families.h"
#include "hhcover/harness.h"
#include "hhcover/io.h"
#include "oracles.h"

namespace hhcover {
namespace {

HereditaryHypergraph Closure(int n, std::vector<VertexSet> edges) {
  return HereditaryHypergraph::FromHyperedges(n, edges);
}

HereditaryHypergraph StableOf(const Graph& g) {
  return MaximalGenerators(StableSetFamily(g));
}

// The connected critical instance with a singleton-free minimum cover found
// by the n <= 5 enumeration: all 3-subsets of a 4-set, rho = 2 < 5/2.
HereditaryHypergraph StrictFixture() {
  return Closure(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Independent replay of the deterministic deletion order using the
// partition oracle.
VertexSet BruteCoreVertices(const HereditaryHypergraph& h) {
  const auto raw = oracle::RawGenerators(h);
  const int rho = oracle::SummarizePartitions(raw, h.vertices().bits()).rho;
  std::uint64_t alive = h.vertices().bits();
  for (bool deleted = true; deleted;) {
    deleted = false;
    for (int v : oracle::Members(alive)) {
      const std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
      std::vector<std::uint64_t> restricted;
      for (auto g : raw) restricted.push_back(g & rest);
      if (oracle::SummarizePartitions(restricted, rest).rho == rho) {
        alive = rest;
        deleted = true;
        break;
      }
    }
  }
  return VertexSet(alive);
}

TEST(CriticalityTest, Examples) {
  const auto c5 = CheckCriticality(StableOf(CycleGraph(5)));
  EXPECT_TRUE(c5.is_critical);
  EXPECT_EQ(c5.rho, 3);
  EXPECT_TRUE(c5.failing_vertices.empty());

  const auto pairs = CheckCriticality(Closure(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(pairs.is_critical);
  EXPECT_EQ(pairs.rho_after_deletion.at(0), 2);
  EXPECT_EQ(pairs.failing_vertices, (std::vector<Vertex>{0, 1, 2, 3}));

  const auto single = CheckCriticality(Closure(1, {{0}}));
  EXPECT_TRUE(single.is_critical);
  EXPECT_EQ(single.rho_after_deletion.at(0), 0);
}

TEST(CriticalCoreTest, TraceOnPairsPlusSingleton) {
  const auto h = Closure(5, {{0, 1}, {2, 3}, {4}});
  const auto core = CriticalCore(h);
  // Deletes 0 (rho stays 3), then 2; what remains is three singletons.
  EXPECT_EQ(core.vertices(), (VertexSet{1, 3, 4}));
  EXPECT_EQ(core.vertices(), BruteCoreVertices(h));
  EXPECT_EQ(core.generators(), (std::vector<VertexSet>{{1}, {3}, {4}}));
  EXPECT_EQ(Rho(core), 3);
  EXPECT_TRUE(IsCritical(core));
}

TEST(CriticalCoreTest, CriticalInputIsUnchanged) {
  const auto c5 = StableOf(CycleGraph(5));
  EXPECT_EQ(CriticalCore(c5), c5);
  // The odd wheel is 4-critical, so its stable-set hypergraph is already
  // critical too.
  const auto w5 = StableOf(WheelGraph(5));
  EXPECT_EQ(Rho(w5), 4);
  EXPECT_EQ(CriticalCore(w5), w5);
}

TEST(CriticalCoreTest, PendantVertexIsStripped) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  const auto h = StableOf(g);
  const auto core = CriticalCore(h);
  EXPECT_EQ(core.vertices(), VertexSet::Range(5));
  EXPECT_EQ(core.vertices(), BruteCoreVertices(h));
  EXPECT_EQ(core.generators(), StableOf(CycleGraph(5)).generators());
}

TEST(CriticalCorePropertyTest, PreservesRhoAndIsCritical) {
  GeneratorConfig cfg{.n = 7, .mode = GeneratorMode::kRandom, .seed = 31,
                      .sample_count = 100, .max_generator_count = 6};
  ForEachRandomHereditary(cfg, [](const HereditaryHypergraph& h) {
    const auto core = CriticalCore(h);
    ASSERT_EQ(Rho(core), Rho(h));
    ASSERT_TRUE(IsCritical(core));
    ASSERT_TRUE(core.vertices().is_subset_of(h.vertices()));
  });
}

TEST(ClassifyTest, C5IsEquality) {
  const auto h = StableOf(CycleGraph(5));
  const auto c = ClassifyCritical(h);
  ASSERT_EQ(c.kind, TheoremCase::kEquality) << c.reason;
  EXPECT_EQ(c.rho, 3);
  ASSERT_TRUE(c.certificate.has_value());
  EXPECT_TRUE(ValidateCertificate(h.edge_graph(), *c.certificate));
  EXPECT_EQ(c.structured_covers.size(), 5u);
}

TEST(ClassifyTest, StrictFixture) {
  const auto h = StrictFixture();
  ASSERT_TRUE(h.is_connected());
  ASSERT_TRUE(IsCritical(h));
  const auto c = ClassifyCritical(h);
  ASSERT_EQ(c.kind, TheoremCase::kStrict) << c.reason;
  EXPECT_EQ(c.rho, 2);
  ASSERT_TRUE(c.singleton_free_cover.has_value());
  EXPECT_EQ(c.singleton_free_cover->parts, (std::vector<VertexSet>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(IsValidCover(h, *c.singleton_free_cover));
}

TEST(ClassifyTest, StrictOnSixVertices) {
  const auto h = Closure(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {1, 3, 5}});
  EXPECT_EQ(oracle::BruteRho(h), 3);
  const auto c = ClassifyCritical(h);
  ASSERT_EQ(c.kind, TheoremCase::kStrict) << c.reason;
  EXPECT_EQ(c.rho, 3);
  ASSERT_TRUE(c.singleton_free_cover.has_value());
  EXPECT_EQ(c.singleton_free_cover->singleton_count(), 0);
  EXPECT_TRUE(IsValidCover(h, *c.singleton_free_cover));
}

TEST(ClassifyTest, NotApplicable) {
  const auto disconnected = ClassifyCritical(Closure(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(disconnected.kind, TheoremCase::kNotApplicable);
  EXPECT_EQ(disconnected.reason, "not connected");

  const auto not_critical = ClassifyCritical(Closure(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(not_critical.kind, TheoremCase::kNotApplicable);
  EXPECT_EQ(not_critical.reason, "not critical");
}

TEST(ClassifyTest, SingleVertexIsDegenerateEquality) {
  const auto c = ClassifyCritical(Closure(1, {{0}}));
  ASSERT_EQ(c.kind, TheoremCase::kEquality);
  EXPECT_EQ(c.rho, 1);
  EXPECT_EQ(c.structured_covers.at(0).parts, (std::vector<VertexSet>{{0}}));
}

TEST(StructuredCoverTest, C5EveryVertex) {
  const auto h = StableOf(CycleGraph(5));
  EXPECT_EQ(StructuredCover(h, 0).parts,
            (std::vector<VertexSet>{{1, 3}, {2, 4}, {0}}));
  for (Vertex v = 0; v < 5; ++v) {
    const Cover c = StructuredCover(h, v);
    EXPECT_TRUE(IsValidCover(h, c));
    EXPECT_EQ(c.size(), 3);
    EXPECT_EQ(c.singleton_count(), 1);
    EXPECT_TRUE(std::find(c.parts.begin(), c.parts.end(), VertexSet::Single(v)) !=
                c.parts.end());
    for (VertexSet p : c.parts) EXPECT_LE(p.size(), 2);
  }
}

TEST(StructuredCoverTest, OtherMinimumCoverShapesCanCoexist) {
  // Equality case, yet {1,2,3} {0} {4} is also a minimum cover: the shape
  // "pairs plus one singleton" is guaranteed to exist, not to be the only one.
  const auto h = Closure(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}, {1, 4}, {2, 4}, {3, 4}});
  ASSERT_EQ(ClassifyCritical(h).kind, TheoremCase::kEquality);
  const Cover triple{{{1, 2, 3}, {0}, {4}}};
  EXPECT_TRUE(IsValidCover(h, triple));
  EXPECT_EQ(triple.size(), Rho(h));
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(StructuredCover(h, v).singleton_count(), 1);
}

TEST(StructuredCoverTest, StrictCaseIsRejected) {
  try {
    StructuredCover(StrictFixture(), 0);
    FAIL() << "expected NotEqualityCase";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEqualityCase);
  }
}

TEST(CorollaryGallaiTest, Examples) {
  const auto k4 = CheckCorollaryGallai(StableOf(CompleteGraph(4)));
  EXPECT_EQ(k4.rho, 4);
  EXPECT_TRUE(k4.condition_met);
  EXPECT_TRUE(k4.not_connected);
  EXPECT_TRUE(k4.holds);

  const auto vacuous = CheckCorollaryGallai(Closure(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(vacuous.condition_met);
  EXPECT_TRUE(vacuous.holds);
}

TEST(CorollaryConcreteTest, Examples) {
  const auto k3 = CheckCorollaryConcrete(StableOf(CompleteGraph(3)));
  ASSERT_TRUE(k3.bipartition.has_value());
  EXPECT_EQ(k3.bipartition->first, (VertexSet{0}));
  EXPECT_EQ(k3.bipartition->second, (VertexSet{1, 2}));

  const auto h = Closure(4, {{0}, {1}, {2}, {3}, {0, 1}});
  const auto w = CheckCorollaryConcrete(h);
  EXPECT_EQ(w.rho, 3);
  // Deleting 0 keeps rho at 3; vertex 2 is the first that lowers it.
  EXPECT_EQ(Rho(h.delete_vertex(0)), 3);
  ASSERT_TRUE(w.vertex.has_value());
  EXPECT_EQ(*w.vertex, 2);
  ASSERT_TRUE(w.bipartition.has_value());
  EXPECT_EQ(w.bipartition->first, (VertexSet{0, 1}));
  EXPECT_EQ(w.bipartition->second, (VertexSet{2, 3}));
}

TEST(CorollaryConcreteTest, ConditionNotMet) {
  try {
    CheckCorollaryConcrete(StableOf(CycleGraph(5)));
    FAIL() << "expected ConditionNotMet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionNotMet);
  }
}

TEST(TheoremPropertyTest, ExhaustiveUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    ForEachHereditary(n, [&](const HereditaryHypergraph& h) {
      const auto c = ClassifyCritical(h);
      ASSERT_NE(c.kind, TheoremCase::kViolation) << HypergraphToJson(h).dump();
      const bool applicable = h.is_connected() && IsCritical(h);
      ASSERT_EQ(applicable, c.kind != TheoremCase::kNotApplicable);
      if (c.kind == TheoremCase::kStrict) {
        ASSERT_LT(2 * c.rho, n + 1);
        ASSERT_TRUE(HasSingletonFreeMinCover(h).exists);
      }
      if (c.kind == TheoremCase::kEquality) {
        ASSERT_EQ(2 * c.rho, n + 1);
        ASSERT_FALSE(HasSingletonFreeMinCover(h).exists);
        for (Vertex v : h.vertices()) {
          ASSERT_TRUE(IsValidCover(h, c.structured_covers.at(v)));
        }
      }
      const auto g = CheckCorollaryGallai(h);
      ASSERT_TRUE(g.holds);
      if (g.condition_met) ASSERT_TRUE(CheckCorollaryConcrete(h).holds());
    });
  }
}

TEST(TheoremJsonTest, ClassificationExport) {
  const auto j = ToJson(ClassifyCritical(StableOf(CycleGraph(5))));
  EXPECT_EQ(j["case"], "Equality");
  EXPECT_EQ(j["rho"], 3);
  EXPECT_EQ(j["structured_covers"].size(), 5u);
  EXPECT_EQ(j["certificate"].size(), 5u);
}

}  // namespace
}  // namespace hhcover
