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

#ifndef HHCOVER_VERTEX_SET_H_
#define HHCOVER_VERTEX_SET_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hhcover {

using Vertex = int;

// Hard cap on the number of vertex labels. Every vertex set is a 64-bit mask.
inline constexpr int kMaxVertices = 64;

// A subset of {0, ..., 63} backed by a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices);

  // {0, ..., n-1}.
  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet Single(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }
  static VertexSet FromVector(const std::vector<Vertex>& vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }

  // Lowest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  // Exclusive upper bound on members (0 for the empty set).
  constexpr int bound() const { return 64 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet with(Vertex v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(Vertex v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  // Orders sets by their sorted member lists, lexicographically.
  std::strong_ordering lex_compare(VertexSet other) const;

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical ordering used for deterministic output: size descending, then
// lexicographic on member lists.
bool BySizeThenLex(VertexSet a, VertexSet b);

// Lexicographic on member lists.
bool Lex(VertexSet a, VertexSet b);

// Calls fn on every nonempty subset of `set` (including `set`), in
// increasing order of bit pattern.
template <typename Fn>
void ForEachNonemptySubset(VertexSet set, Fn&& fn) {
  const std::uint64_t all = set.bits();
  std::uint64_t sub = 0;
  do {
    sub = (sub - all) & all;
    if (sub != 0) fn(VertexSet(sub));
  } while (sub != 0);
}

}  // namespace hhcover

template <>
struct std::hash<hhcover::VertexSet> {
  std::size_t operator()(hhcover::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // HHCOVER_VERTEX_SET_H_
