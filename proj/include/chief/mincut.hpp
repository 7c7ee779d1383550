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

#ifndef CHIEF_MINCUT_HPP_
#define CHIEF_MINCUT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "chief/graph.hpp"

namespace chief {

struct CutResult {
  // Sum of crossing weights; the crossing edge count when unweighted.
  double weight = 0.0;
  // Crossing edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> cut_edges;
  // Bipartition in the input graph's labels; both sorted and nonempty.
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
};

struct MinCutOptions {
  // When false every edge counts 1 regardless of its stored weight.
  bool weighted = false;
  // Vertex every maximum-adjacency phase starts from.
  VertexId start_vertex = 0;
};

// Stoer-Wagner global minimum cut. Each phase grows a set by repeatedly
// adding the most tightly connected vertex (ties to the lowest index), the
// last two vertices are merged, and the lightest cut-of-the-phase wins.
// Requires a connected graph with at least two vertices.
CutResult MinCut(const Graph& g, const MinCutOptions& options = {});

// Early-stopping variant: returns some cut lighter than `k` if one exists
// and std::nullopt when the global minimum cut is at least `k`. The returned
// cut need not be minimum.
//
// Each phase contracts every scanned edge (v, y) whose key for y reached k
// right after the scan (Nagamochi-Ibaraki): that key lower-bounds the local
// connectivity of v and y, so no cut lighter than k separates them.
std::optional<CutResult> MinCutBelow(const Graph& g, double k,
                                     const MinCutOptions& options = {});

// Crossing weight of the bipartition given by membership flags.
double CutWeight(const Graph& g, const std::vector<char>& in_side_a,
                 bool weighted = false);

}  // namespace chief

#endif  // CHIEF_MINCUT_HPP_
