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

#include "hhcover/error.h"

namespace hhcover {
namespace {

void CheckLabel(Vertex v) {
  if (v < 0 || v >= kMaxVertices) {
    throw Error(ErrorCode::kBadIndex, "vertex " + std::to_string(v));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vertices) {
  for (Vertex v : vertices) {
    CheckLabel(v);
    bits_ |= std::uint64_t{1} << v;
  }
}

VertexSet VertexSet::FromVector(const std::vector<Vertex>& vertices) {
  VertexSet s;
  for (Vertex v : vertices) {
    CheckLabel(v);
    s = s.with(v);
  }
  return s;
}

std::strong_ordering VertexSet::lex_compare(VertexSet other) const {
  std::uint64_t a = bits_;
  std::uint64_t b = other.bits_;
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x <=> y;
    a &= a - 1;
    b &= b - 1;
  }
  // A proper prefix sorts first.
  return (a != 0) <=> (b != 0);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool BySizeThenLex(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.lex_compare(b) < 0;
}

bool Lex(VertexSet a, VertexSet b) { return a.lex_compare(b) < 0; }

}  // namespace hhcover
