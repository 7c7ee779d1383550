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

#include "chief/kcc.hpp"

#include <algorithm>
#include <string>

#include "chief/error.hpp"
#include "chief/parallel.hpp"
#include "chief/mincut.hpp"

namespace chief {
namespace {

struct PieceOutcome {
  std::vector<InducedSubgraph> children;
  std::vector<VertexId> singletons;           // parent labels
  std::vector<std::vector<VertexId>> emitted;  // parent labels
};

std::vector<VertexId> ToParent(const InducedSubgraph& piece,
                               std::span<const VertexId> local) {
  std::vector<VertexId> out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(piece.to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Splits `parts` (local labels of `piece`) into singletons and children.
void Push(const InducedSubgraph& piece,
          const std::vector<std::vector<VertexId>>& parts, PieceOutcome& out) {
  std::vector<std::vector<VertexId>> multi;
  for (const auto& part : parts) {
    if (part.size() == 1) {
      out.singletons.push_back(piece.to_parent[part.front()]);
    } else {
      multi.push_back(part);
    }
  }
  auto subs = ExtractInducedSubgraphs(piece.graph, multi);
  for (auto& sub : subs) {
    for (VertexId& v : sub.to_parent) v = piece.to_parent[v];
    out.children.push_back(std::move(sub));
  }
}

PieceOutcome ProcessPiece(const InducedSubgraph& piece, int k,
                          bool weighted) {
  PieceOutcome out;
  const Graph& h = piece.graph;
  const VertexId n = h.num_vertices();
  if (n == 1) {
    out.singletons.push_back(piece.to_parent.front());
    return out;
  }

  // A vertex of degree below k is cut off by its own star.
  std::vector<double> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = weighted ? h.weighted_degree(v) : h.degree(v);
    if (deg[v] < k) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    out.singletons.push_back(piece.to_parent[v]);
    auto nb = h.neighbors(v);
    auto w = h.weights(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      VertexId u = nb[i];
      if (!alive[u]) continue;
      deg[u] -= weighted ? w[i] : 1.0;
      if (deg[u] < k) {
        alive[u] = 0;
        queue.push_back(u);
      }
    }
  }
  if (!queue.empty()) {
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v]) rest.push_back(v);
    }
    if (!rest.empty()) Push(piece, ConnectedComponents(h, rest), out);
    return out;
  }

  auto components = ConnectedComponents(h);
  if (components.size() > 1) {
    Push(piece, components, out);
    return out;
  }

  MinCutOptions mc;
  mc.weighted = weighted;
  auto cut = MinCutBelow(h, static_cast<double>(k), mc);
  if (!cut) {
    out.emitted.push_back(piece.to_parent);
    return out;
  }
  auto parts = ConnectedComponents(h, cut->side_a);
  auto more = ConnectedComponents(h, cut->side_b);
  parts.insert(parts.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  Push(piece, parts, out);
  return out;
}

Decomposition Finalize(const Graph& g, int k,
                       std::vector<std::vector<VertexId>> subgraphs,
                       std::vector<VertexId> singletons) {
  Decomposition d;
  d.k = k;
  for (auto& s : subgraphs) std::sort(s.begin(), s.end());
  std::sort(subgraphs.begin(), subgraphs.end());
  std::sort(singletons.begin(), singletons.end());
  d.subgraphs = std::move(subgraphs);
  d.singletons = std::move(singletons);
  auto piece = PieceIndex(d, g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (piece[e.u] < 0 || piece[e.u] != piece[e.v]) {
      d.removed_edges.emplace_back(e.u, e.v);
    }
  }
  return d;
}

Decomposition DecomposeComponents(const Graph& g, int k, bool weighted,
                                  bool parallel) {
  std::vector<std::vector<VertexId>> subgraphs;
  std::vector<VertexId> singletons;
  std::vector<std::vector<VertexId>> multi;
  for (auto& comp : ConnectedComponents(g)) {
    if (comp.size() == 1) {
      singletons.push_back(comp.front());
    } else {
      multi.push_back(std::move(comp));
    }
  }
  std::vector<InducedSubgraph> work = ExtractInducedSubgraphs(g, multi);
  while (!work.empty()) {
    std::vector<PieceOutcome> outcomes(work.size());
    const auto count = static_cast<std::ptrdiff_t>(work.size());
    ExceptionSlot slot;
    // Pieces are independent; outcomes are merged in index order below.
#pragma omp parallel for schedule(dynamic, 1) if (parallel && count > 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      slot.Capture([&] { outcomes[i] = ProcessPiece(work[i], k, weighted); });
    }
    slot.Rethrow();
    std::vector<InducedSubgraph> next;
    for (auto& o : outcomes) {
      singletons.insert(singletons.end(), o.singletons.begin(),
                        o.singletons.end());
      for (auto& e : o.emitted) subgraphs.push_back(std::move(e));
      for (auto& c : o.children) next.push_back(std::move(c));
    }
    work = std::move(next);
  }
  return Finalize(g, k, std::move(subgraphs), std::move(singletons));
}

void ValidateBase(const Decomposition& base, const Graph& g) {
  if (base.k < 1) throw InvalidArgument("base decomposition has k < 1");
  std::vector<int> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  auto mark = [&](VertexId v) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("base decomposition names vertex " +
                            std::to_string(v) + " outside the graph");
    }
    if (seen[v]++) {
      throw InvalidArgument("base decomposition lists vertex " +
                            std::to_string(v) + " twice");
    }
  };
  for (const auto& s : base.subgraphs) {
    if (s.size() < 2) {
      throw InvalidArgument("base decomposition has a subgraph with < 2 "
                            "vertices");
    }
    for (VertexId v : s) mark(v);
    if (ConnectedComponents(g, s).size() != 1) {
      throw InvalidArgument("base subgraph is not connected in the graph");
    }
  }
  for (VertexId v : base.singletons) mark(v);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!seen[v]) {
      throw InvalidArgument("base decomposition misses vertex " +
                            std::to_string(v));
    }
  }
}

}  // namespace

std::vector<int> PieceIndex(const Decomposition& d, VertexId num_vertices) {
  std::vector<int> piece(static_cast<std::size_t>(num_vertices), -1);
  for (std::size_t i = 0; i < d.subgraphs.size(); ++i) {
    for (VertexId v : d.subgraphs[i]) piece[v] = static_cast<int>(i);
  }
  return piece;
}

Decomposition Decompose(const Graph& g, int k,
                        const DecomposeOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (k == 1) {
    std::vector<std::vector<VertexId>> subgraphs;
    std::vector<VertexId> singletons;
    for (auto& comp : ConnectedComponents(g)) {
      if (comp.size() == 1) {
        singletons.push_back(comp.front());
      } else {
        subgraphs.push_back(std::move(comp));
      }
    }
    return Finalize(g, k, std::move(subgraphs), std::move(singletons));
  }
  return DecomposeComponents(g, k, options.weighted, options.parallel);
}

Decomposition DecomposeFromBase(const Decomposition& base, const Graph& g,
                                int k, const DecomposeOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  ValidateBase(base, g);
  if (base.k == k) {
    return Finalize(g, k, base.subgraphs, base.singletons);
  }

  std::vector<std::vector<VertexId>> subgraphs;
  std::vector<VertexId> singletons;
  if (base.k < k) {
    // A k-edge-connected subgraph is k'-edge-connected for k' < k, so every
    // answer lies inside one base subgraph.
    singletons = base.singletons;
    auto pieces = ExtractInducedSubgraphs(g, base.subgraphs);
    for (const auto& piece : pieces) {
      auto local = Decompose(piece.graph, k, options);
      for (const auto& s : local.subgraphs) {
        subgraphs.push_back(ToParent(piece, s));
      }
      for (VertexId v : local.singletons) {
        singletons.push_back(piece.to_parent[v]);
      }
    }
    return Finalize(g, k, std::move(subgraphs), std::move(singletons));
  }

  // base.k > k: each base subgraph is k-edge-connected, so contracting it
  // to one vertex keeps every k-edge-connected relation intact.
  std::vector<VertexId> image(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<std::vector<VertexId>> expand;
  for (const auto& s : base.subgraphs) {
    for (VertexId v : s) image[v] = static_cast<VertexId>(expand.size());
    expand.push_back(s);
  }
  for (VertexId v : base.singletons) {
    image[v] = static_cast<VertexId>(expand.size());
    expand.push_back({v});
  }
  std::vector<Edge> contracted_edges;
  for (const Edge& e : g.edges()) {
    VertexId a = image[e.u];
    VertexId b = image[e.v];
    if (a != b) {
      contracted_edges.push_back({a, b, options.weighted ? e.weight : 1.0});
    }
  }
  Graph contracted = Graph::FromEdges(static_cast<VertexId>(expand.size()),
                                      contracted_edges);
  DecomposeOptions inner = options;
  inner.weighted = true;  // parallel edges became multiplicities
  auto local = Decompose(contracted, k, inner);
  for (const auto& s : local.subgraphs) {
    std::vector<VertexId> members;
    for (VertexId x : s) {
      members.insert(members.end(), expand[x].begin(), expand[x].end());
    }
    subgraphs.push_back(std::move(members));
  }
  for (VertexId x : local.singletons) {
    if (expand[x].size() > 1) {
      subgraphs.push_back(expand[x]);
    } else {
      singletons.push_back(expand[x].front());
    }
  }
  return Finalize(g, k, std::move(subgraphs), std::move(singletons));
}

}  // namespace chief
