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

#ifndef CHIEF_PIPELINE_HPP_
#define CHIEF_PIPELINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chief/graph.hpp"
#include "chief/kcc.hpp"
#include "chief/motif.hpp"
#include "chief/spectral.hpp"

namespace chief {

enum class Mode { kAuto, kExact, kApprox, kBaseline };

// Exact (ST) when the motif's minimum degree is at least k: no instance can
// straddle a cut lighter than k. Approximate (AP) otherwise.
enum class Regime { kExact, kApprox };

Regime ClassifyMode(MotifId motif, int k);
std::string ModeName(Mode mode);                 // "auto", "st", "ap", ...
std::optional<Mode> ParseMode(std::string_view name);

struct ChiefConfig {
  MotifId motif = MotifId::kM32;
  int k = 3;
  Mode mode = Mode::kAuto;
  // Regions smaller than this are emitted without further splitting;
  // 0 selects 2 * motif size.
  int min_cluster_size = 0;
  // A spectral split is only accepted at or below this conductance.
  double max_conductance = 0.5;
  // Edges lighter than this are dropped before anything else.
  double weight_threshold = 0.0;
  // Use edge weights in minimum cuts.
  bool weighted_cut = false;
  // Optional precomputed decomposition of the input graph to start from.
  std::optional<Decomposition> base;
  FiedlerOptions eigen;
  // false selects the single-threaded reference path.
  bool parallel = true;

  int EffectiveMinClusterSize() const;
};

struct Cluster {
  std::vector<VertexId> members;  // sorted
  // Motif conductance of the cut that separated this cluster from the rest
  // of its region; 0 when it was split off along a piece or motif-component
  // boundary (no instance cut).
  double conductance = 0.0;
  int piece = -1;  // decomposition piece, -1 in baseline mode
  // Recursion trail inside the piece: 'c<i>' motif component i,
  // 'a' the swept cluster side, 'b' its complement.
  std::string path;
};

struct ClusterSet {
  // Ordered by smallest member; the index is the cluster id.
  std::vector<Cluster> clusters;
  // Pruned vertices, decomposition singletons and motif-degree-0 vertices.
  std::vector<VertexId> unclustered;
};

struct RunStats {
  std::string mode;         // resolved: st, ap or baseline
  bool exact = false;       // motif min degree >= k (or baseline)
  std::map<std::string, double> phase_ms;  // prune, decompose, enumerate, ...
  std::int64_t pieces = 0;
  std::int64_t instances = 0;  // motif instances enumerated
  std::int64_t clusters = 0;
  std::int64_t unclustered = 0;
  std::int64_t peak_piece_size = 0;
  std::int64_t eigensolves = 0;
  std::int64_t pruned_vertices = 0;
  std::int64_t pruned_edges = 0;
  double total_ms = 0.0;

  // Flat "key value" lines, keys sorted.
  std::string ToKeyValue() const;
  std::string ToJson() const;
};

struct ChiefResult {
  ClusterSet clusters;
  RunStats stats;
};

struct PruneResult {
  Graph graph;  // same vertex labels; removed vertices become isolated
  std::vector<VertexId> removed_vertices;  // sorted
  std::size_t removed_edges = 0;           // by weight plus by degree
};

// Drops edges lighter than `weight_threshold`, then repeatedly removes
// vertices of degree below k until none remain (k-core peeling). Vertices
// that were already isolated count as removed.
PruneResult Prune(const Graph& g, int k, double weight_threshold);

// Threshold, prune, decompose (skipped in baseline mode), then recursively
// bisect each piece on its motif Laplacian. A region first splits into its
// motif-connected components; a connected region of at least
// min_cluster_size vertices is swept, and both sides are processed further
// when the best conductance is at most max_conductance. Everything else is
// emitted as a cluster.
ChiefResult RunChief(const Graph& g, const ChiefConfig& config);

// True when every motif instance of g lies inside one subgraph of
// Decompose(g, k). Requires the motif's minimum degree to be >= k.
bool StPreservationCheck(const Graph& g, MotifId motif, int k);

// The same comparison without the degree precondition; false shows an
// instance broken by the decomposition.
bool MotifsPreservedByDecomposition(const Graph& g, MotifId motif, int k);

// Instances of `motif` inside the subgraphs of `d`, in g's labels.
MotifInstances InstancesWithinPieces(const Graph& g, const Decomposition& d,
                                     MotifId motif);

}  // namespace chief

#endif  // CHIEF_PIPELINE_HPP_
