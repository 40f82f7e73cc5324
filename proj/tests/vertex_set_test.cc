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

#include "hhcover/vertex_set.h"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hhcover/error.h"

namespace hhcover {
namespace {

TEST(VertexSetTest, BasicMembership) {
  const VertexSet s{0, 3, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(63));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.bound(), 64);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 3, 63}));
  EXPECT_EQ(s.to_string(), "{0,3,63}");
}

TEST(VertexSetTest, RangeCoversAllSixtyFourBits) {
  EXPECT_EQ(VertexSet::Range(0).size(), 0);
  EXPECT_EQ(VertexSet::Range(5).size(), 5);
  EXPECT_EQ(VertexSet::Range(64).size(), 64);
}

TEST(VertexSetTest, RejectsOutOfRangeLabels) {
  try {
    VertexSet::FromVector({1, 64});
    FAIL() << "expected BadIndex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadIndex);
  }
}

TEST(VertexSetTest, LexOrderMatchesSortedMemberLists) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const VertexSet a(rng() & 0xff);
    const VertexSet b(rng() & 0xff);
    EXPECT_EQ(a.lex_compare(b) < 0, a.to_vector() < b.to_vector())
        << a.to_string() << " vs " << b.to_string();
  }
}

TEST(VertexSetTest, SubsetEnumerationVisitsEachNonemptySubsetOnce) {
  const VertexSet s{1, 4, 6, 9};
  std::vector<VertexSet> seen;
  ForEachNonemptySubset(s, [&](VertexSet sub) {
    EXPECT_TRUE(sub.is_subset_of(s));
    seen.push_back(sub);
  });
  EXPECT_EQ(seen.size(), 15u);
  std::sort(seen.begin(), seen.end(), Lex);
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
}

}  // namespace
}  // namespace hhcover
