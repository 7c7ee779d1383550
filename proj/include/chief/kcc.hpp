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

#ifndef CHIEF_KCC_HPP_
#define CHIEF_KCC_HPP_

#include <utility>
#include <vector>

#include "chief/graph.hpp"

namespace chief {

// All maximal k-edge-connected subgraphs of a graph.
struct Decomposition {
  int k = 1;
  // Member sets (sorted) of the multi-vertex subgraphs, ordered by their
  // smallest member. Each induces a k-edge-connected subgraph.
  std::vector<std::vector<VertexId>> subgraphs;
  // Vertices that ended up alone, sorted.
  std::vector<VertexId> singletons;
  // Every edge of the input not inside a subgraph, (u < v), sorted.
  std::vector<std::pair<VertexId, VertexId>> removed_edges;
};

struct DecomposeOptions {
  // Count edge weights instead of edge multiplicity in cuts.
  bool weighted = false;
  // Process the worklist with OpenMP; false gives the serial reference.
  bool parallel = true;
};

// Recursive min-cut splitting. Starting from the connected components, any
// piece that has a cut lighter than k is split along it (vertices whose
// degree is below k are peeled first, each being such a cut on its own) and
// the remaining pieces are emitted. k == 1 reduces to connected components.
Decomposition Decompose(const Graph& g, int k,
                        const DecomposeOptions& options = {});

// Same result as Decompose(g, k), reusing a decomposition of g at another
// connectivity level. When base.k >= k each base subgraph is contracted to a
// single vertex before splitting; when base.k < k each base subgraph is
// decomposed on its own. Throws InvalidArgument when `base` does not
// partition the vertices of g.
Decomposition DecomposeFromBase(const Decomposition& base, const Graph& g,
                                int k, const DecomposeOptions& options = {});

// Vertex -> index into subgraphs, or -1 for singletons.
std::vector<int> PieceIndex(const Decomposition& d, VertexId num_vertices);

}  // namespace chief

#endif  // CHIEF_KCC_HPP_
