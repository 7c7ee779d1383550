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

#ifndef CHIEF_GRAPH_HPP_
#define CHIEF_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chief {

using VertexId = std::int32_t;

struct Edge {
  VertexId u;
  VertexId v;
  double weight = 1.0;
};

// Immutable simple undirected graph in compressed sparse row form. Every
// neighbor list is sorted ascending and every edge is stored in both
// directions with the same weight.
class Graph {
 public:
  Graph() = default;

  // Builds a simple graph on `num_vertices` vertices. Self-loops are dropped
  // and parallel edges collapse into one edge whose weight is the sum.
  // Throws InvalidArgument on out-of-range endpoints or negative weights.
  static Graph FromEdges(VertexId num_vertices, std::span<const Edge> edges);

  VertexId num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  std::span<const double> weights(VertexId v) const {
    return {weights_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  VertexId degree(VertexId v) const {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }
  double weighted_degree(VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const;
  // Weight of edge (u, v), or 0 when absent.
  double edge_weight(VertexId u, VertexId v) const;

  // Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  double total_weight() const;

 private:
  VertexId num_vertices_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<double> weights_;
};

// Bijection between external string ids and dense internal indices.
class VertexMap {
 public:
  // Returns the index of `name`, assigning the next free index on first use.
  VertexId Intern(std::string_view name);
  // Returns -1 when `name` is unknown.
  VertexId Find(std::string_view name) const;
  const std::string& name(VertexId v) const { return names_[v]; }
  VertexId size() const { return static_cast<VertexId>(names_.size()); }

  // Identity map "0".."n-1", used for generated graphs.
  static VertexMap Identity(VertexId n);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
};

struct LoadedGraph {
  Graph graph;
  VertexMap vertices;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_lines = 0;
};

// Parses a whitespace-separated edge list "u v [w]" with '#' comments.
// When `weighted` is false the third column is ignored and every line
// contributes weight 1, so duplicate lines sum into a multiplicity.
LoadedGraph ReadEdgeList(std::istream& in, bool weighted,
                         std::string_view source_name = "<stream>");
LoadedGraph LoadEdgeList(const std::filesystem::path& path, bool weighted);

// Writes one "u v w" line per edge (u < v by index). Weights are omitted
// when every weight equals 1. `header` lines are emitted as '#' comments.
void WriteEdgeList(std::ostream& out, const Graph& g, const VertexMap& vertices,
                   std::span<const std::string> header = {});
void SaveEdgeList(const std::filesystem::path& path, const Graph& g,
                  const VertexMap& vertices,
                  std::span<const std::string> header = {});

struct InducedSubgraph {
  Graph graph;
  // to_parent[local] = parent vertex index; sorted ascending.
  std::vector<VertexId> to_parent;
};

// Induced subgraph on `members` (any order, duplicates allowed), relabeled
// densely in ascending parent order. Throws on members outside the graph.
InducedSubgraph ExtractInducedSubgraph(const Graph& g,
                                       std::span<const VertexId> members);

// Batch form of ExtractInducedSubgraph for disjoint member sets; shares one
// relabeling buffer, so the cost is O(n + size of the parts).
std::vector<InducedSubgraph> ExtractInducedSubgraphs(
    const Graph& g, const std::vector<std::vector<VertexId>>& parts);

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<VertexId>> ConnectedComponents(const Graph& g);

// Components of the subgraph induced by `members`; same ordering rules.
std::vector<std::vector<VertexId>> ConnectedComponents(
    const Graph& g, std::span<const VertexId> members);

}  // namespace chief

#endif  // CHIEF_GRAPH_HPP_
