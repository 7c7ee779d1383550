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

#include "chief/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "chief/error.hpp"

namespace chief {

Graph Graph::FromEdges(VertexId num_vertices, std::span<const Edge> edges) {
  if (num_vertices < 0) throw InvalidArgument("negative vertex count");
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw InvalidArgument("edge endpoint out of range: (" +
                            std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ")");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument("edge weight must be a nonnegative finite number");
    }
    if (e.u == e.v) continue;
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<Edge> merged;
  merged.reserve(canon.size());
  for (const Edge& e : canon) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  Graph g;
  g.num_vertices_ = num_vertices;
  std::vector<std::size_t> deg(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (const Edge& e : merged) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  }
  g.neighbors_.resize(2 * merged.size());
  g.weights_.resize(2 * merged.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // `merged` is sorted by (u, v): filling the smaller-neighbor halves first
  // and the larger-neighbor halves second leaves every list sorted.
  for (const Edge& e : merged) {
    g.neighbors_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  for (const Edge& e : merged) {
    g.neighbors_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
  }
  return g;
}

double Graph::weighted_degree(VertexId v) const {
  auto w = weights(v);
  return std::accumulate(w.begin(), w.end(), 0.0);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::edge_weight(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0.0;
  return weights(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices_; ++u) {
    auto nb = neighbors(u);
    auto w = weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] > u) out.push_back({u, nb[i], w[i]});
    }
  }
  return out;
}

double Graph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0) / 2.0;
}

VertexId VertexMap::Intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  auto id = static_cast<VertexId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

VertexId VertexMap::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

VertexMap VertexMap::Identity(VertexId n) {
  VertexMap map;
  for (VertexId v = 0; v < n; ++v) map.Intern(std::to_string(v));
  return map;
}

namespace {

bool ParseDouble(std::string_view token, double& out) {
  auto* first = token.data();
  auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

LoadedGraph ReadEdgeList(std::istream& in, bool weighted,
                         std::string_view source_name) {
  LoadedGraph result;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    return IoError(std::string(source_name) + ":" + std::to_string(line_no) +
                   ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string a, b, w, extra;
    if (!(fields >> a)) continue;  // blank or comment-only line
    if (!(fields >> b)) throw fail("expected at least two columns");
    double weight = 1.0;
    if (fields >> w) {
      if (weighted) {
        if (!ParseDouble(w, weight) || !std::isfinite(weight)) {
          throw fail("cannot parse weight '" + w + "'");
        }
        if (weight < 0.0) throw fail("negative weight " + w);
      }
      if (fields >> extra) throw fail("too many columns");
    }
    VertexId u = result.vertices.Intern(a);
    VertexId v = result.vertices.Intern(b);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    edges.push_back({u, v, weight});
  }
  if (in.bad()) throw IoError("read error on " + std::string(source_name));
  result.graph = Graph::FromEdges(result.vertices.size(), edges);
  result.duplicate_lines = edges.size() - result.graph.num_edges();
  return result;
}

LoadedGraph LoadEdgeList(const std::filesystem::path& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadEdgeList(in, weighted, path.string());
}

void WriteEdgeList(std::ostream& out, const Graph& g, const VertexMap& vertices,
                   std::span<const std::string> header) {
  for (const auto& line : header) out << "# " << line << '\n';
  auto edges = g.edges();
  bool unit = std::all_of(edges.begin(), edges.end(),
                          [](const Edge& e) { return e.weight == 1.0; });
  std::ostringstream weight_text;
  weight_text.precision(17);
  for (const Edge& e : edges) {
    out << vertices.name(e.u) << '\t' << vertices.name(e.v);
    if (!unit) {
      weight_text.str("");
      weight_text << e.weight;
      out << '\t' << weight_text.str();
    }
    out << '\n';
  }
}

void SaveEdgeList(const std::filesystem::path& path, const Graph& g,
                  const VertexMap& vertices,
                  std::span<const std::string> header) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  WriteEdgeList(out, g, vertices, header);
  if (!out) throw IoError("write failed for " + path.string());
}

namespace {

// `local` must be all -1 on entry and is restored before returning.
InducedSubgraph ExtractWithBuffer(const Graph& g,
                                  std::span<const VertexId> members,
                                  std::vector<VertexId>& local) {
  InducedSubgraph sub;
  sub.to_parent.assign(members.begin(), members.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()),
                      sub.to_parent.end());
  for (VertexId v : sub.to_parent) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("member " + std::to_string(v) +
                            " is not a vertex of the graph");
    }
  }
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local[sub.to_parent[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    VertexId u = sub.to_parent[i];
    auto nb = g.neighbors(u);
    auto w = g.weights(u);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      if (nb[j] > u && local[nb[j]] >= 0) {
        edges.push_back({static_cast<VertexId>(i), local[nb[j]], w[j]});
      }
    }
  }
  for (VertexId v : sub.to_parent) local[v] = -1;
  sub.graph = Graph::FromEdges(static_cast<VertexId>(sub.to_parent.size()),
                               edges);
  return sub;
}

}  // namespace

InducedSubgraph ExtractInducedSubgraph(const Graph& g,
                                       std::span<const VertexId> members) {
  std::vector<VertexId> local(static_cast<std::size_t>(g.num_vertices()), -1);
  return ExtractWithBuffer(g, members, local);
}

std::vector<InducedSubgraph> ExtractInducedSubgraphs(
    const Graph& g, const std::vector<std::vector<VertexId>>& parts) {
  std::vector<VertexId> local(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<InducedSubgraph> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    out.push_back(ExtractWithBuffer(g, part, local));
  }
  return out;
}

namespace {

std::vector<std::vector<VertexId>> ComponentsImpl(
    const Graph& g, std::span<const VertexId> order,
    const std::vector<char>& allowed) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId start : order) {
    if (seen[start] || !allowed[start]) continue;
    std::vector<VertexId> comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w] && allowed[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> ConnectedComponents(const Graph& g) {
  std::vector<VertexId> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<char> allowed(order.size(), 1);
  return ComponentsImpl(g, order, allowed);
}

std::vector<std::vector<VertexId>> ConnectedComponents(
    const Graph& g, std::span<const VertexId> members) {
  std::vector<VertexId> order(members.begin(), members.end());
  std::sort(order.begin(), order.end());
  std::vector<char> allowed(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : order) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("member " + std::to_string(v) +
                            " is not a vertex of the graph");
    }
    allowed[v] = 1;
  }
  return ComponentsImpl(g, order, allowed);
}

}  // namespace chief
