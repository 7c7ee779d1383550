// Copyright 2026 The Chief Authors
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

#ifndef CHIEF_MOTIF_HPP_
#define CHIEF_MOTIF_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chief/graph.hpp"

namespace chief {

// Catalog of undirected motifs. The open path motifs on three and four
// vertices are deliberately absent.
enum class MotifId {
  kM32,  // triangle
  kM42,  // star K1,3
  kM43,  // 4-cycle
  kM44,  // tailed triangle (paw)
  kM45,  // diamond (4-cycle plus one chord)
  kM46,  // 4-clique
};

struct MotifSpec {
  MotifId id;
  std::string_view name;
  int size;        // 3 or 4
  int min_degree;  // minimum vertex degree of the pattern
  // Pattern edges on vertices 0..size-1.
  std::vector<std::pair<int, int>> pattern;
};

const MotifSpec& GetMotif(MotifId id);
std::span<const MotifId> AllMotifs();
// Accepts "M32", "M42".."M46" (case-insensitive); nullopt otherwise.
std::optional<MotifId> ParseMotif(std::string_view name);

// Motif instances stored flat: instance i occupies
// vertices[i * size, (i + 1) * size), sorted ascending within the instance.
// Instances are listed in lexicographic order without duplicates.
struct MotifInstances {
  int size = 3;
  std::vector<VertexId> vertices;

  std::size_t count() const { return vertices.size() / size; }
  std::span<const VertexId> operator[](std::size_t i) const {
    return {vertices.data() + i * size, static_cast<std::size_t>(size)};
  }
};

// Every vertex set whose induced subgraph is isomorphic to the motif
// pattern. Induced semantics: a 4-clique contains no diamond, star, cycle or
// paw. Weights are ignored.
//
// Cost per motif, with d the maximum degree:
//   M32  O(m * d) by ordered neighbor intersection
//   M46  O(#triangles * d) by extending degree-ordered triangles
//   M45  O(m * d^2) over the chord edge and pairs of common neighbors
//   M44  O(#triangles * d) over the triangle and a pendant vertex
//   M43  O(n * d^3) anchored at the smallest vertex of the cycle
//   M42  O(n * d^3) over the center and triples of leaves
// Work is spread across threads by anchor vertex and the per-thread buffers
// are merged and sorted, so the result does not depend on the thread count.
MotifInstances EnumerateMotifs(const Graph& g, MotifId id);

// Keeps the instances lying entirely inside `members` (flags over vertices).
MotifInstances RestrictInstances(const MotifInstances& instances,
                                 const std::vector<char>& members);

// Sparse symmetric co-occurrence matrix: weight(i, j) counts the instances
// containing both i and j; the diagonal is zero. Rows are in CSR form with
// sorted columns; degree[i] is the row sum.
struct MotifAdjacency {
  VertexId n = 0;
  std::vector<std::size_t> row_offsets{0};
  std::vector<VertexId> columns;
  std::vector<double> values;
  std::vector<double> degree;

  std::span<const VertexId> row_columns(VertexId i) const {
    return {columns.data() + row_offsets[i],
            row_offsets[i + 1] - row_offsets[i]};
  }
  std::span<const double> row_values(VertexId i) const {
    return {values.data() + row_offsets[i],
            row_offsets[i + 1] - row_offsets[i]};
  }
  double at(VertexId i, VertexId j) const;
  std::size_t nonzeros() const { return columns.size(); }
};

// One pass over the instances, incrementing every within-instance pair.
MotifAdjacency BuildMotifAdjacency(VertexId n,
                                   const MotifInstances& instances);
MotifAdjacency BuildMotifAdjacency(const Graph& g, MotifId id);

// Motif conductance of the set flagged by `in_set`:
//   cut = #instances with vertices on both sides
//   vol(S) = sum over instances of |instance ∩ S|
//   phi = cut / min(vol(S), vol(complement))
// nullopt when the smaller volume is 0. Throws InvalidArgument when the set
// or its complement is empty.
std::optional<double> MotifConductance(const MotifInstances& instances,
                                       const std::vector<char>& in_set);
std::optional<double> MotifConductance(const Graph& g, MotifId id,
                                       std::span<const VertexId> set);

namespace serial {

// Single-threaded reference implementations of the kernels above.
MotifInstances EnumerateMotifs(const Graph& g, MotifId id);
MotifAdjacency BuildMotifAdjacency(VertexId n,
                                   const MotifInstances& instances);

}  // namespace serial

}  // namespace chief

#endif  // CHIEF_MOTIF_HPP_
