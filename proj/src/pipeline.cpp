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

#include "chief/pipeline.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "chief/error.hpp"
#include "chief/parallel.hpp"

namespace chief {
namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// A vertex set awaiting clustering. Vertices are labels of the owning
// piece; `instances` are the piece's instances lying inside the region.
struct Region {
  int piece = -1;
  std::vector<VertexId> vertices;  // sorted piece labels
  MotifInstances instances;        // piece labels
  std::string path;
  double conductance = 0.0;  // of the cut that produced this region
};

struct PieceContext {
  std::vector<VertexId> to_global;  // piece label -> input vertex
};

struct RegionOutcome {
  std::vector<Region> children;
  std::vector<Cluster> clusters;
  std::vector<VertexId> unclustered;  // global labels
  double eigensolve_ms = 0.0;
  double sweep_ms = 0.0;
  std::int64_t eigensolves = 0;
};

std::vector<VertexId> ToGlobal(const PieceContext& piece,
                               std::span<const VertexId> vertices) {
  std::vector<VertexId> out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(piece.to_global[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Union-find over the active vertices of a region, joined by instances.
std::vector<std::vector<VertexId>> MotifComponents(
    const std::vector<VertexId>& active, const MotifInstances& instances,
    const std::vector<VertexId>& local) {
  std::vector<VertexId> parent(active.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < instances.count(); ++i) {
    auto inst = instances[i];
    VertexId root = find(local[inst[0]]);
    for (std::size_t j = 1; j < inst.size(); ++j) {
      VertexId other = find(local[inst[j]]);
      if (other != root) parent[std::max(root, other)] = std::min(root, other);
      root = std::min(root, other);
    }
  }
  std::vector<int> slot(active.size(), -1);
  std::vector<std::vector<VertexId>> comps;
  for (std::size_t i = 0; i < active.size(); ++i) {
    VertexId r = find(static_cast<VertexId>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(active[i]);
  }
  return comps;
}

RegionOutcome ProcessRegion(const Region& region, const PieceContext& piece,
                            const ChiefConfig& config, int min_size) {
  RegionOutcome out;
  VertexId max_label = 0;
  for (VertexId v : region.vertices) max_label = std::max(max_label, v);
  std::vector<char> used(static_cast<std::size_t>(max_label) + 1, 0);
  for (VertexId v : region.instances.vertices) used[v] = 1;
  std::vector<VertexId> active;
  for (VertexId v : region.vertices) {
    if (used[v]) {
      active.push_back(v);
    } else {
      out.unclustered.push_back(piece.to_global[v]);
    }
  }
  if (active.empty()) return out;

  std::vector<VertexId> local(static_cast<std::size_t>(max_label) + 1, -1);
  for (std::size_t i = 0; i < active.size(); ++i) {
    local[active[i]] = static_cast<VertexId>(i);
  }

  auto emit = [&](std::span<const VertexId> members, double conductance) {
    Cluster c;
    c.members = ToGlobal(piece, members);
    c.conductance = conductance;
    c.piece = region.piece;
    c.path = region.path;
    out.clusters.push_back(std::move(c));
  };
  auto child = [&](std::vector<VertexId> vertices, std::string step,
                   double conductance) {
    Region r;
    r.piece = region.piece;
    std::vector<char> member(used.size(), 0);
    for (VertexId v : vertices) member[v] = 1;
    r.instances = RestrictInstances(region.instances, member);
    r.vertices = std::move(vertices);
    r.path = region.path + step;
    r.conductance = conductance;
    out.children.push_back(std::move(r));
  };

  auto comps = MotifComponents(active, region.instances, local);
  if (comps.size() > 1) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      child(std::move(comps[i]), "c" + std::to_string(i), 0.0);
    }
    return out;
  }
  if (static_cast<int>(active.size()) < min_size) {
    emit(active, region.conductance);
    return out;
  }

  MotifInstances compact;
  compact.size = region.instances.size;
  compact.vertices.reserve(region.instances.vertices.size());
  for (VertexId v : region.instances.vertices) {
    compact.vertices.push_back(local[v]);
  }
  auto t0 = Clock::now();
  const auto n_active = static_cast<VertexId>(active.size());
  MotifAdjacency w = config.parallel
                         ? BuildMotifAdjacency(n_active, compact)
                         : serial::BuildMotifAdjacency(n_active, compact);
  MotifLaplacian lap = BuildLaplacian(w);
  FiedlerResult fiedler = FiedlerVector(lap, config.eigen);
  out.eigensolve_ms = MsSince(t0);
  out.eigensolves = 1;
  auto t1 = Clock::now();
  SweepResult sweep = SweepCut(compact, lap, fiedler.vector);
  out.sweep_ms = MsSince(t1);

  if (sweep.best_conductance > config.max_conductance) {
    emit(active, region.conductance);
    return out;
  }
  auto lift = [&](const std::vector<VertexId>& side) {
    std::vector<VertexId> labels;
    labels.reserve(side.size());
    for (VertexId i : side) labels.push_back(active[lap.active()[i]]);
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  child(lift(sweep.cluster), "a", sweep.best_conductance);
  child(lift(sweep.complement), "b", sweep.best_conductance);
  return out;
}

}  // namespace

Regime ClassifyMode(MotifId motif, int k) {
  return GetMotif(motif).min_degree >= k ? Regime::kExact : Regime::kApprox;
}

std::string ModeName(Mode mode) {
  switch (mode) {
    case Mode::kAuto:
      return "auto";
    case Mode::kExact:
      return "st";
    case Mode::kApprox:
      return "ap";
    case Mode::kBaseline:
      return "baseline";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view name) {
  for (Mode m : {Mode::kAuto, Mode::kExact, Mode::kApprox, Mode::kBaseline}) {
    if (ModeName(m) == name) return m;
  }
  return std::nullopt;
}

int ChiefConfig::EffectiveMinClusterSize() const {
  return min_cluster_size > 0 ? min_cluster_size : 2 * GetMotif(motif).size;
}

std::string RunStats::ToKeyValue() const {
  std::map<std::string, std::string> kv;
  auto num = [](double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << x;
    return s.str();
  };
  kv["mode"] = mode;
  kv["exact"] = exact ? "true" : "false";
  for (const auto& [phase, ms] : phase_ms) kv["ms." + phase] = num(ms);
  kv["ms.total"] = num(total_ms);
  kv["pieces"] = std::to_string(pieces);
  kv["instances"] = std::to_string(instances);
  kv["clusters"] = std::to_string(clusters);
  kv["unclustered"] = std::to_string(unclustered);
  kv["peak_piece_size"] = std::to_string(peak_piece_size);
  kv["eigensolves"] = std::to_string(eigensolves);
  kv["pruned_vertices"] = std::to_string(pruned_vertices);
  kv["pruned_edges"] = std::to_string(pruned_edges);
  std::string text;
  for (const auto& [k, v] : kv) text += k + " " + v + "\n";
  return text;
}

std::string RunStats::ToJson() const {
  nlohmann::json j;
  j["mode"] = mode;
  j["exact"] = exact;
  j["phase_ms"] = phase_ms;
  j["total_ms"] = total_ms;
  j["pieces"] = pieces;
  j["instances"] = instances;
  j["clusters"] = clusters;
  j["unclustered"] = unclustered;
  j["peak_piece_size"] = peak_piece_size;
  j["eigensolves"] = eigensolves;
  j["pruned_vertices"] = pruned_vertices;
  j["pruned_edges"] = pruned_edges;
  return j.dump(2);
}

PruneResult Prune(const Graph& g, int k, double weight_threshold) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const VertexId n = g.num_vertices();
  std::vector<Edge> kept;
  PruneResult result;
  for (const Edge& e : g.edges()) {
    if (e.weight < weight_threshold) {
      ++result.removed_edges;
    } else {
      kept.push_back(e);
    }
  }
  Graph thresholded = Graph::FromEdges(n, kept);
  std::vector<VertexId> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = thresholded.degree(v);
    if (deg[v] < k || deg[v] == 0) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId u : thresholded.neighbors(queue[head])) {
      if (alive[u] && --deg[u] < k) {
        alive[u] = 0;
        queue.push_back(u);
      }
    }
  }
  std::vector<Edge> core;
  for (const Edge& e : kept) {
    if (alive[e.u] && alive[e.v]) {
      core.push_back(e);
    } else {
      ++result.removed_edges;
    }
  }
  result.graph = Graph::FromEdges(n, core);
  result.removed_vertices = std::move(queue);
  std::sort(result.removed_vertices.begin(), result.removed_vertices.end());
  return result;
}

ChiefResult RunChief(const Graph& g, const ChiefConfig& config) {
  const auto start = Clock::now();
  if (config.k < 1) throw InvalidArgument("k must be at least 1");
  if (!(config.max_conductance >= 0.0)) {
    throw InvalidArgument("max conductance must be nonnegative");
  }
  const int min_size = config.EffectiveMinClusterSize();
  if (min_size < GetMotif(config.motif).size) {
    throw InvalidArgument("min cluster size must be at least the motif size");
  }

  ChiefResult result;
  RunStats& stats = result.stats;
  const bool baseline = config.mode == Mode::kBaseline;
  const Regime regime = ClassifyMode(config.motif, config.k);
  switch (config.mode) {
    case Mode::kAuto:
      stats.mode = regime == Regime::kExact ? "st" : "ap";
      break;
    case Mode::kExact:
    case Mode::kApprox:
    case Mode::kBaseline:
      stats.mode = ModeName(config.mode);
      break;
  }
  stats.exact = baseline || regime == Regime::kExact;

  std::vector<VertexId> unclustered;
  std::vector<std::vector<VertexId>> piece_members;

  auto t = Clock::now();
  // With a precomputed base the decomposition already isolates every vertex
  // of degree below k, so only the weight filter is applied.
  const int prune_k = (baseline || config.base) ? 1 : config.k;
  PruneResult pruned = Prune(g, prune_k, config.weight_threshold);
  stats.phase_ms["prune"] = MsSince(t);
  stats.pruned_vertices = static_cast<std::int64_t>(
      pruned.removed_vertices.size());
  stats.pruned_edges = static_cast<std::int64_t>(pruned.removed_edges);
  unclustered = pruned.removed_vertices;

  if (baseline) {
    std::vector<VertexId> all;
    std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
    for (VertexId v : pruned.removed_vertices) removed[v] = 1;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!removed[v]) all.push_back(v);
    }
    if (!all.empty()) piece_members.push_back(std::move(all));
  } else {
    t = Clock::now();
    DecomposeOptions dopt;
    dopt.weighted = config.weighted_cut;
    dopt.parallel = config.parallel;
    Decomposition d;
    if (config.base) {
      d = DecomposeFromBase(*config.base, pruned.graph, config.k, dopt);
      // Vertices already counted as pruned are isolated, hence singletons.
      std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()),
                                0);
      for (VertexId v : pruned.removed_vertices) removed[v] = 1;
      for (VertexId v : d.singletons) {
        if (!removed[v]) unclustered.push_back(v);
      }
    } else {
      d = Decompose(pruned.graph, config.k, dopt);
      std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()),
                                0);
      for (VertexId v : pruned.removed_vertices) removed[v] = 1;
      for (VertexId v : d.singletons) {
        if (!removed[v]) unclustered.push_back(v);
      }
    }
    piece_members = std::move(d.subgraphs);
    stats.phase_ms["decompose"] = MsSince(t);
  }
  stats.pieces = static_cast<std::int64_t>(piece_members.size());
  for (const auto& p : piece_members) {
    stats.peak_piece_size =
        std::max<std::int64_t>(stats.peak_piece_size,
                               static_cast<std::int64_t>(p.size()));
  }

  // Enumerate motif instances inside every piece.
  t = Clock::now();
  std::vector<InducedSubgraph> subs =
      ExtractInducedSubgraphs(pruned.graph, piece_members);
  std::vector<PieceContext> pieces(subs.size());
  std::vector<Region> frontier(subs.size());
  const auto piece_count = static_cast<std::ptrdiff_t>(subs.size());
  ExceptionSlot enumerate_slot;
#pragma omp parallel for schedule(dynamic, 1) \
    if (config.parallel && piece_count > 1)
  for (std::ptrdiff_t i = 0; i < piece_count; ++i) {
    enumerate_slot.Capture([&] {
      Region& r = frontier[i];
      r.piece = baseline ? -1 : static_cast<int>(i);
      r.vertices.resize(static_cast<std::size_t>(subs[i].graph.num_vertices()));
      std::iota(r.vertices.begin(), r.vertices.end(), 0);
      r.instances = config.parallel
                        ? EnumerateMotifs(subs[i].graph, config.motif)
                        : serial::EnumerateMotifs(subs[i].graph, config.motif);
      pieces[i].to_global = std::move(subs[i].to_parent);
    });
  }
  enumerate_slot.Rethrow();
  for (const Region& r : frontier) {
    stats.instances += static_cast<std::int64_t>(r.instances.count());
  }
  stats.phase_ms["enumerate"] = MsSince(t);

  double eigensolve_ms = 0.0;
  double sweep_ms = 0.0;
  t = Clock::now();
  std::vector<Cluster> clusters;
  while (!frontier.empty()) {
    std::vector<RegionOutcome> outcomes(frontier.size());
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
    ExceptionSlot slot;
    // With a single region the parallelism moves into the matrix kernels.
#pragma omp parallel for schedule(dynamic, 1) \
    if (config.parallel && count > 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      slot.Capture([&] {
        const Region& r = frontier[i];
        const auto& ctx = pieces[static_cast<std::size_t>(
            baseline ? 0 : r.piece)];
        outcomes[i] = ProcessRegion(r, ctx, config, min_size);
      });
    }
    slot.Rethrow();
    std::vector<Region> next;
    for (auto& o : outcomes) {
      eigensolve_ms += o.eigensolve_ms;
      sweep_ms += o.sweep_ms;
      stats.eigensolves += o.eigensolves;
      unclustered.insert(unclustered.end(), o.unclustered.begin(),
                         o.unclustered.end());
      for (auto& c : o.clusters) clusters.push_back(std::move(c));
      for (auto& c : o.children) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }
  stats.phase_ms["cluster"] = MsSince(t);
  stats.phase_ms["eigensolve"] = eigensolve_ms;
  stats.phase_ms["sweep"] = sweep_ms;

  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              return a.members.front() < b.members.front();
            });
  std::sort(unclustered.begin(), unclustered.end());
  result.clusters.clusters = std::move(clusters);
  result.clusters.unclustered = std::move(unclustered);
  stats.clusters = static_cast<std::int64_t>(result.clusters.clusters.size());
  stats.unclustered =
      static_cast<std::int64_t>(result.clusters.unclustered.size());
  stats.total_ms = MsSince(start);
  return result;
}

MotifInstances InstancesWithinPieces(const Graph& g, const Decomposition& d,
                                     MotifId motif) {
  const int size = GetMotif(motif).size;
  std::vector<std::array<VertexId, 4>> tuples;
  for (const auto& sub : ExtractInducedSubgraphs(g, d.subgraphs)) {
    auto local = EnumerateMotifs(sub.graph, motif);
    for (std::size_t i = 0; i < local.count(); ++i) {
      std::array<VertexId, 4> t{};
      auto inst = local[i];
      for (int j = 0; j < size; ++j) t[j] = sub.to_parent[inst[j]];
      tuples.push_back(t);
    }
  }
  std::sort(tuples.begin(), tuples.end());
  MotifInstances out;
  out.size = size;
  for (const auto& t : tuples) {
    out.vertices.insert(out.vertices.end(), t.begin(), t.begin() + size);
  }
  return out;
}

bool StPreservationCheck(const Graph& g, MotifId motif, int k) {
  if (ClassifyMode(motif, k) != Regime::kExact) {
    throw InvalidArgument(
        "preservation holds only when the motif's minimum degree is >= k");
  }
  return MotifsPreservedByDecomposition(g, motif, k);
}

bool MotifsPreservedByDecomposition(const Graph& g, MotifId motif, int k) {
  auto all = EnumerateMotifs(g, motif);
  auto kept = InstancesWithinPieces(g, Decompose(g, k), motif);
  return all.vertices == kept.vertices;
}

}  // namespace chief
