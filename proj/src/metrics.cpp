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

#include "chief/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "chief/error.hpp"
#include "chief/parallel.hpp"

namespace chief {
namespace {

// -1 outside every cluster; throws on overlap.
std::vector<int> Labels(const Graph& g, const VertexSets& clusters) {
  std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (VertexId v : clusters[c]) {
      if (v < 0 || v >= g.num_vertices()) {
        throw InvalidArgument("cluster member outside the graph");
      }
      if (label[v] >= 0) {
        throw InvalidArgument("vertex " + std::to_string(v) +
                              " appears in two clusters");
      }
      label[v] = static_cast<int>(c);
    }
  }
  return label;
}

// Hop distances from `source`, restricted to vertices with allowed[v] != 0.
std::vector<int> Bfs(const Graph& g, VertexId source,
                     const std::vector<char>* allowed) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] >= 0 || (allowed && !(*allowed)[w])) continue;
      dist[w] = dist[v] + 1;
      queue.push(w);
    }
  }
  return dist;
}

}  // namespace

double Modularity(const Graph& g, const VertexSets& clusters) {
  auto label = Labels(g, clusters);
  std::vector<double> k(static_cast<std::size_t>(g.num_vertices()), 0.0);
  double m = 0.0;
  std::vector<double> internal(clusters.size(), 0.0);
  for (const Edge& e : g.edges()) {
    if (label[e.u] < 0 || label[e.v] < 0) continue;
    m += 1.0;
    k[e.u] += 1.0;
    k[e.v] += 1.0;
    if (label[e.u] == label[e.v]) internal[label[e.u]] += 1.0;
  }
  if (m == 0.0) {
    throw InvalidArgument("modularity is undefined without clustered edges");
  }
  if (clusters.size() == 2) {
    // sum_ij A_ij (s_i s_j + 1) = 4 * (edges inside a cluster);
    // sum_ij k_i k_j (s_i s_j + 1) = (sum_i k_i s_i)^2 + (sum_i k_i)^2.
    double signed_sum = 0.0;
    double total = 0.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (label[v] < 0) continue;
      signed_sum += label[v] == 0 ? k[v] : -k[v];
      total += k[v];
    }
    const double a_term = 4.0 * (internal[0] + internal[1]);
    const double k_term =
        (signed_sum * signed_sum + total * total) / (2.0 * m);
    return (a_term - k_term) / (4.0 * m);
  }
  std::vector<double> d(clusters.size(), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (label[v] >= 0) d[label[v]] += k[v];
  }
  double q = 0.0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const double frac = d[c] / (2.0 * m);
    q += internal[c] / m - frac * frac;
  }
  return q;
}

double Cii(std::int64_t papers_i, std::int64_t papers_j,
           std::int64_t co_papers) {
  if (papers_i <= 0 || papers_j <= 0) {
    throw InvalidArgument("CII needs positive paper counts");
  }
  if (co_papers < 0 || co_papers > papers_i || co_papers > papers_j) {
    throw InvalidArgument("co-authored papers exceed an author's total");
  }
  const double co = static_cast<double>(co_papers);
  return co * co /
         (static_cast<double>(papers_i) * static_cast<double>(papers_j));
}

std::map<std::pair<VertexId, VertexId>, double> CiiTable(
    std::span<const std::int64_t> papers,
    std::span<const CoPaperCount> pairs) {
  std::map<std::pair<VertexId, VertexId>, double> table;
  for (const auto& p : pairs) {
    if (p.u < 0 || p.v < 0 || static_cast<std::size_t>(p.u) >= papers.size() ||
        static_cast<std::size_t>(p.v) >= papers.size()) {
      throw InvalidArgument("co-paper pair names an unknown author");
    }
    table[{std::min(p.u, p.v), std::max(p.u, p.v)}] =
        Cii(papers[p.u], papers[p.v], p.count);
  }
  return table;
}

VertexId ClusterCenter(const Graph& g, std::span<const VertexId> cluster,
                       const CenterOptions& options) {
  if (cluster.empty()) throw InvalidArgument("empty cluster has no center");
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : cluster) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("cluster member outside the graph");
    }
    in[v] = 1;
  }
  std::vector<VertexId> sorted(cluster.begin(), cluster.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> best;
  int best_degree = -1;
  for (VertexId v : sorted) {
    int d = 0;
    for (VertexId w : g.neighbors(v)) d += in[w];
    if (d > best_degree) {
      best_degree = d;
      best.assign(1, v);
    } else if (d == best_degree) {
      best.push_back(v);
    }
  }
  if (options.tie_seed && best.size() > 1) {
    std::mt19937_64 rng(*options.tie_seed);
    std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
    return best[pick(rng)];
  }
  return best.front();
}

std::optional<double> Ccp(const Graph& g, std::span<const VertexId> cluster,
                          const CenterOptions& options) {
  VertexId center = ClusterCenter(g, cluster, options);
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : cluster) in[v] = 1;
  auto dist = Bfs(g, center, &in);
  double sum = 0.0;
  std::size_t count = 0;
  for (VertexId v : cluster) {
    if (!in[v]) continue;  // duplicate listing
    in[v] = 0;
    if (dist[v] < 0) return std::nullopt;
    sum += dist[v];
    ++count;
  }
  return sum / static_cast<double>(count);
}

CspResult Csp(const Graph& g, const VertexSets& clusters,
              const CenterOptions& options) {
  if (clusters.size() < 2) {
    throw InvalidArgument("cluster separation needs at least two clusters");
  }
  std::vector<VertexId> centers(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    centers[c] = ClusterCenter(g, clusters[c], options);
  }
  const auto count = static_cast<std::ptrdiff_t>(centers.size());
  std::vector<std::vector<int>> dist(centers.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    dist[c] = Bfs(g, centers[c], nullptr);
  }
  CspResult r;
  double sum = 0.0;
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      int d = dist[a][centers[b]];
      if (d < 0) {
        ++r.disconnected_pairs;
      } else {
        sum += d;
        ++r.included_pairs;
      }
    }
  }
  if (r.included_pairs > 0) {
    r.value = sum / static_cast<double>(r.included_pairs);
  }
  return r;
}

ClusterMetrics Evaluate(const Graph& g, const VertexSets& clusters,
                        const CenterOptions& options) {
  ClusterMetrics m;
  try {
    m.modularity = Modularity(g, clusters);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInvalidArgument) throw;
    Labels(g, clusters);  // rethrows overlap errors
  }
  m.per_cluster_ccp.resize(clusters.size());
  const auto count = static_cast<std::ptrdiff_t>(clusters.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    slot.Capture(
        [&] { m.per_cluster_ccp[c] = Ccp(g, clusters[c], options); });
  }
  slot.Rethrow();
  double sum = 0.0;
  std::size_t defined = 0;
  for (const auto& c : m.per_cluster_ccp) {
    if (c) {
      sum += *c;
      ++defined;
    } else {
      ++m.undefined_ccp;
    }
  }
  if (defined > 0) m.avg_ccp = sum / static_cast<double>(defined);
  if (clusters.size() >= 2) m.csp = Csp(g, clusters, options);
  return m;
}

}  // namespace chief
