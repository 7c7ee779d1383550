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

#ifndef CHIEF_METRICS_HPP_
#define CHIEF_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chief/graph.hpp"

namespace chief {

using VertexSets = std::vector<std::vector<VertexId>>;

// Newman modularity of a partition of (a subset of) the vertices. Vertices
// outside every cluster are ignored and m is recounted on the subgraph
// induced by the clustered vertices. Edges count 1 regardless of weight.
// With exactly two clusters the two-community form
//   Q = 1/(4m) sum_ij (A_ij - k_i k_j / 2m)(s_i s_j + 1)
// is evaluated; otherwise sum_c (e_c / m - (d_c / 2m)^2). Throws
// InvalidArgument when clusters overlap or the clustered subgraph has no
// edges.
double Modularity(const Graph& g, const VertexSets& clusters);

// Collaboration intensity index co^2 / (papers_i * papers_j).
double Cii(std::int64_t papers_i, std::int64_t papers_j,
           std::int64_t co_papers);

struct CoPaperCount {
  VertexId u;
  VertexId v;
  std::int64_t count;
};

// CII for every co-authoring pair, keyed (min, max).
std::map<std::pair<VertexId, VertexId>, double> CiiTable(
    std::span<const std::int64_t> papers, std::span<const CoPaperCount> pairs);

struct CenterOptions {
  // When set, ties between maximum-degree vertices are broken by a seeded
  // random choice instead of the lowest index.
  std::optional<std::uint64_t> tie_seed;
};

// Vertex of maximum degree inside the subgraph induced by `cluster`.
VertexId ClusterCenter(const Graph& g, std::span<const VertexId> cluster,
                       const CenterOptions& options = {});

// Cluster compactness: mean hop distance, within the cluster, from every
// member to the center (the center contributes 0). nullopt when the cluster
// is disconnected in its induced subgraph.
std::optional<double> Ccp(const Graph& g, std::span<const VertexId> cluster,
                          const CenterOptions& options = {});

struct CspResult {
  // Mean center-to-center hop distance in g over connected pairs; nullopt
  // when no pair of centers is connected.
  std::optional<double> value;
  std::size_t included_pairs = 0;
  std::size_t disconnected_pairs = 0;
};

// Cluster separation. Needs at least two clusters.
CspResult Csp(const Graph& g, const VertexSets& clusters,
              const CenterOptions& options = {});

struct ClusterMetrics {
  std::optional<double> modularity;  // nullopt when m = 0
  std::vector<std::optional<double>> per_cluster_ccp;
  std::optional<double> avg_ccp;  // over clusters with a defined CCP
  std::size_t undefined_ccp = 0;
  CspResult csp;  // empty when fewer than two clusters
};

ClusterMetrics Evaluate(const Graph& g, const VertexSets& clusters,
                        const CenterOptions& options = {});

}  // namespace chief

#endif  // CHIEF_METRICS_HPP_
