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

#include "chief/mincut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

#include "chief/error.hpp"

namespace chief {
namespace {

// Multigraph under lazy contraction. Adjacency entries keep their original
// endpoint ids and are resolved through union-find at scan time, so parallel
// edges between supernodes add up naturally in the adjacency keys.
class Contraction {
 public:
  Contraction(const Graph& g, bool weighted)
      : parent_(static_cast<std::size_t>(g.num_vertices())),
        label_(parent_.size()),
        adj_(parent_.size()),
        members_(parent_.size()),
        roots_(g.num_vertices()) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(label_.begin(), label_.end(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      auto w = g.weights(v);
      adj_[v].reserve(nb.size());
      for (std::size_t i = 0; i < nb.size(); ++i) {
        adj_[v].emplace_back(nb[i], weighted ? w[i] : 1.0);
      }
      members_[v].push_back(v);
    }
  }

  VertexId Find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  VertexId num_roots() const { return roots_; }

  // Merges the supernodes holding a and b (small-to-large).
  void Merge(VertexId a, VertexId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (adj_[a].size() + members_[a].size() <
        adj_[b].size() + members_[b].size()) {
      std::swap(a, b);
    }
    parent_[b] = a;
    label_[a] = std::min(label_[a], label_[b]);
    adj_[a].insert(adj_[a].end(), adj_[b].begin(), adj_[b].end());
    members_[a].insert(members_[a].end(), members_[b].begin(),
                       members_[b].end());
    adj_[b].clear();
    adj_[b].shrink_to_fit();
    members_[b].clear();
    members_[b].shrink_to_fit();
    std::erase_if(adj_[a], [&](const auto& e) { return Find(e.first) == a; });
    --roots_;
  }

  // Unions every pair, then rebuilds the adjacency of each new root once,
  // summing parallel edges.
  void MergeAll(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<VertexId> touched;
    for (auto [a, b] : pairs) {
      a = Find(a);
      b = Find(b);
      if (a == b) continue;
      if (members_[a].size() < members_[b].size()) std::swap(a, b);
      parent_[b] = a;
      label_[a] = std::min(label_[a], label_[b]);
      members_[a].insert(members_[a].end(), members_[b].begin(),
                         members_[b].end());
      members_[b].clear();
      members_[b].shrink_to_fit();
      adj_[a].insert(adj_[a].end(), adj_[b].begin(), adj_[b].end());
      adj_[b].clear();
      adj_[b].shrink_to_fit();
      touched.push_back(a);
      --roots_;
    }
    key_.assign(parent_.size(), 0.0);
    for (VertexId a : touched) {
      if (Find(a) != a) continue;
      auto& list = adj_[a];
      std::size_t out = 0;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto [y, w] = list[i];
        VertexId r = Find(y);
        if (r == a) continue;
        if (key_[r] == 0.0) list[out++] = {r, 0.0};
        key_[r] += w;
      }
      list.resize(out);
      for (auto& [r, w] : list) {
        w = key_[r];
        key_[r] = 0.0;
      }
    }
  }

  struct Phase {
    std::vector<VertexId> order;   // roots in maximum-adjacency order
    std::vector<double> attach;    // attach[i] = w(A[i-1], order[i])
    // Pairs (v, y) whose key reached `threshold` when the edge was scanned;
    // their local edge connectivity is at least that key.
    std::vector<std::pair<VertexId, VertexId>> certified;
  };

  // One maximum-adjacency search from the supernode holding `start`.
  Phase MaximumAdjacencyOrder(
      VertexId start,
      double threshold = std::numeric_limits<double>::infinity()) {
    using Entry = std::tuple<double, VertexId, VertexId>;  // key, -label, root
    Phase phase;
    phase.order.reserve(static_cast<std::size_t>(roots_));
    phase.attach.reserve(static_cast<std::size_t>(roots_));
    key_.assign(parent_.size(), 0.0);
    in_set_.assign(parent_.size(), 0);
    std::priority_queue<Entry> heap;
    start = Find(start);
    heap.emplace(0.0, -label_[start], start);
    while (!heap.empty()) {
      auto [key, neg_label, v] = heap.top();
      heap.pop();
      if (in_set_[v] || key != key_[v]) continue;
      in_set_[v] = 1;
      phase.order.push_back(v);
      phase.attach.push_back(key);
      for (const auto& [y, w] : adj_[v]) {
        VertexId r = Find(y);
        if (r == v || in_set_[r]) continue;
        key_[r] += w;
        if (key_[r] >= threshold) phase.certified.emplace_back(v, r);
        heap.emplace(key_[r], -label_[r], r);
      }
    }
    if (static_cast<VertexId>(phase.order.size()) != roots_) {
      throw InvalidArgument("minimum cut requires a connected graph");
    }
    return phase;
  }

  std::vector<VertexId> Members(VertexId root) {
    std::vector<VertexId> m = members_[Find(root)];
    std::sort(m.begin(), m.end());
    return m;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<VertexId> label_;  // smallest original vertex in the supernode
  std::vector<std::vector<std::pair<VertexId, double>>> adj_;
  std::vector<std::vector<VertexId>> members_;
  VertexId roots_;
  std::vector<double> key_;
  std::vector<char> in_set_;
};

void CheckInput(const Graph& g, VertexId start) {
  if (g.num_vertices() < 2) {
    throw InvalidArgument("minimum cut requires at least two vertices");
  }
  if (start < 0 || start >= g.num_vertices()) {
    throw InvalidArgument("start vertex out of range");
  }
}

CutResult Realize(const Graph& g, std::vector<VertexId> side_a, bool weighted) {
  CutResult cut;
  std::vector<char> in_a(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : side_a) in_a[v] = 1;
  cut.side_a = std::move(side_a);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in_a[v]) cut.side_b.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (in_a[e.u] != in_a[e.v]) {
      cut.cut_edges.emplace_back(e.u, e.v);
      cut.weight += weighted ? e.weight : 1.0;
    }
  }
  return cut;
}

}  // namespace

CutResult MinCut(const Graph& g, const MinCutOptions& options) {
  CheckInput(g, options.start_vertex);
  Contraction c(g, options.weighted);
  double best = std::numeric_limits<double>::infinity();
  std::vector<VertexId> best_side;
  while (c.num_roots() > 1) {
    auto phase = c.MaximumAdjacencyOrder(options.start_vertex);
    const std::size_t last = phase.order.size() - 1;
    if (phase.attach[last] < best) {
      best = phase.attach[last];
      best_side = c.Members(phase.order[last]);
    }
    c.Merge(phase.order[last - 1], phase.order[last]);
  }
  return Realize(g, std::move(best_side), options.weighted);
}

std::optional<CutResult> MinCutBelow(const Graph& g, double k,
                                     const MinCutOptions& options) {
  CheckInput(g, options.start_vertex);
  if (!(k > 0.0)) throw InvalidArgument("k must be positive");
  Contraction c(g, options.weighted);
  while (c.num_roots() > 1) {
    auto phase = c.MaximumAdjacencyOrder(options.start_vertex, k);
    const std::size_t last = phase.order.size() - 1;
    if (phase.attach[last] < k) {
      return Realize(g, c.Members(phase.order[last]), options.weighted);
    }
    // The last pair is certified by the cut-of-the-phase.
    phase.certified.emplace_back(phase.order[last - 1], phase.order[last]);
    c.MergeAll(phase.certified);
  }
  return std::nullopt;
}

double CutWeight(const Graph& g, const std::vector<char>& in_side_a,
                 bool weighted) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if (in_side_a[e.u] != in_side_a[e.v]) total += weighted ? e.weight : 1.0;
  }
  return total;
}

}  // namespace chief
