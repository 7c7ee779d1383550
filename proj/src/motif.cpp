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

#include "chief/motif.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>

#include "chief/error.hpp"
#include "chief/parallel.hpp"

namespace chief {
namespace {

const std::array<MotifSpec, 6>& Catalog() {
  static const std::array<MotifSpec, 6> catalog = {{
      {MotifId::kM32, "M32", 3, 2, {{0, 1}, {1, 2}, {0, 2}}},
      {MotifId::kM42, "M42", 4, 1, {{0, 1}, {0, 2}, {0, 3}}},
      {MotifId::kM43, "M43", 4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {MotifId::kM44, "M44", 4, 1, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
      {MotifId::kM45, "M45", 4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}},
      {MotifId::kM46, "M46", 4, 3,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
  }};
  return catalog;
}

constexpr std::array<MotifId, 6> kAllMotifs = {
    MotifId::kM32, MotifId::kM42, MotifId::kM43,
    MotifId::kM44, MotifId::kM45, MotifId::kM46};

using Tuple = std::array<VertexId, 4>;

// Degree ordering used to orient edges for clique-type enumeration.
struct Orientation {
  std::vector<VertexId> rank;
  std::vector<std::vector<VertexId>> out;  // higher-ranked neighbors

  explicit Orientation(const Graph& g)
      : rank(static_cast<std::size_t>(g.num_vertices())),
        out(static_cast<std::size_t>(g.num_vertices())) {
    std::vector<VertexId> order(rank.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = static_cast<VertexId>(i);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (VertexId w : g.neighbors(v)) {
        if (rank[w] > rank[v]) out[v].push_back(w);
      }
      std::sort(out[v].begin(), out[v].end(),
                [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
    }
  }
};

Tuple Sorted(VertexId a, VertexId b, VertexId c) {
  Tuple t{a, b, c, 0};
  std::sort(t.begin(), t.begin() + 3);
  return t;
}

Tuple Sorted(VertexId a, VertexId b, VertexId c, VertexId d) {
  Tuple t{a, b, c, d};
  std::sort(t.begin(), t.end());
  return t;
}

// Triangles whose lowest-ranked vertex is u, as (u, v, w) with
// rank(u) < rank(v) < rank(w).
template <typename Fn>
void ForEachTriangleAt(const Graph& g, const Orientation& o, VertexId u,
                       Fn&& fn) {
  const auto& out = o.out[u];
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (g.has_edge(out[i], out[j])) fn(out[i], out[j]);
    }
  }
}

void EnumerateAt(const Graph& g, const Orientation& o, MotifId id, VertexId u,
                 std::vector<Tuple>& buf) {
  switch (id) {
    case MotifId::kM32:
      ForEachTriangleAt(g, o, u, [&](VertexId v, VertexId w) {
        buf.push_back(Sorted(u, v, w));
      });
      break;
    case MotifId::kM46: {
      const auto& out = o.out[u];
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
          if (!g.has_edge(out[i], out[j])) continue;
          for (std::size_t l = j + 1; l < out.size(); ++l) {
            if (g.has_edge(out[i], out[l]) && g.has_edge(out[j], out[l])) {
              buf.push_back(Sorted(u, out[i], out[j], out[l]));
            }
          }
        }
      }
      break;
    }
    case MotifId::kM44:
      // The pendant vertex x touches exactly one triangle corner t.
      ForEachTriangleAt(g, o, u, [&](VertexId v, VertexId w) {
        const std::array<VertexId, 3> tri{u, v, w};
        for (int t = 0; t < 3; ++t) {
          VertexId a = tri[(t + 1) % 3];
          VertexId b = tri[(t + 2) % 3];
          for (VertexId x : g.neighbors(tri[t])) {
            if (x == a || x == b) continue;
            if (g.has_edge(x, a) || g.has_edge(x, b)) continue;
            buf.push_back(Sorted(u, v, w, x));
          }
        }
      });
      break;
    case MotifId::kM45: {
      // Anchored at the chord (u, v), u < v; the two other vertices are
      // non-adjacent common neighbors of the chord.
      for (VertexId v : g.neighbors(u)) {
        if (v <= u) continue;
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        std::vector<VertexId> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i) {
          for (std::size_t j = i + 1; j < common.size(); ++j) {
            if (!g.has_edge(common[i], common[j])) {
              buf.push_back(Sorted(u, v, common[i], common[j]));
            }
          }
        }
      }
      break;
    }
    case MotifId::kM43: {
      // u is the smallest vertex of the cycle, w the vertex opposite u.
      auto nu = g.neighbors(u);
      auto first = std::upper_bound(nu.begin(), nu.end(), u);
      for (auto ia = first; ia != nu.end(); ++ia) {
        for (auto ib = ia + 1; ib != nu.end(); ++ib) {
          VertexId a = *ia;
          VertexId b = *ib;
          if (g.has_edge(a, b)) continue;
          auto na = g.neighbors(a);
          auto nb = g.neighbors(b);
          auto x = std::upper_bound(na.begin(), na.end(), u);
          auto y = std::upper_bound(nb.begin(), nb.end(), u);
          while (x != na.end() && y != nb.end()) {
            if (*x < *y) {
              ++x;
            } else if (*y < *x) {
              ++y;
            } else {
              if (!g.has_edge(u, *x)) buf.push_back(Sorted(u, a, b, *x));
              ++x;
              ++y;
            }
          }
        }
      }
      break;
    }
    case MotifId::kM42: {
      auto nu = g.neighbors(u);
      for (std::size_t i = 0; i < nu.size(); ++i) {
        for (std::size_t j = i + 1; j < nu.size(); ++j) {
          if (g.has_edge(nu[i], nu[j])) continue;
          for (std::size_t l = j + 1; l < nu.size(); ++l) {
            if (!g.has_edge(nu[i], nu[l]) && !g.has_edge(nu[j], nu[l])) {
              buf.push_back(Sorted(u, nu[i], nu[j], nu[l]));
            }
          }
        }
      }
      break;
    }
  }
}

MotifInstances Flatten(std::vector<Tuple>& tuples, int size) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  MotifInstances out;
  out.size = size;
  out.vertices.reserve(tuples.size() * size);
  for (const Tuple& t : tuples) {
    out.vertices.insert(out.vertices.end(), t.begin(), t.begin() + size);
  }
  return out;
}

// Vertex -> incident instance ids (CSR).
struct Incidence {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> instances;

  Incidence(VertexId n, const MotifInstances& inst)
      : offsets(static_cast<std::size_t>(n) + 1, 0) {
    for (VertexId v : inst.vertices) ++offsets[v + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    instances.resize(inst.vertices.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < inst.count(); ++i) {
      for (VertexId v : inst[i]) instances[cursor[v]++] = i;
    }
  }
};

void CheckVertices(VertexId n, const MotifInstances& instances) {
  for (VertexId v : instances.vertices) {
    if (v < 0 || v >= n) {
      throw InvalidArgument("motif instance vertex out of range");
    }
  }
}

}  // namespace

const MotifSpec& GetMotif(MotifId id) {
  return Catalog()[static_cast<std::size_t>(id)];
}

std::span<const MotifId> AllMotifs() { return kAllMotifs; }

std::optional<MotifId> ParseMotif(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (const MotifSpec& spec : Catalog()) {
    if (spec.name == upper) return spec.id;
  }
  return std::nullopt;
}

MotifInstances EnumerateMotifs(const Graph& g, MotifId id) {
  const int size = GetMotif(id).size;
  Orientation orientation(g);
  std::vector<std::vector<Tuple>> buffers(
      static_cast<std::size_t>(MaxThreads()));
  const VertexId n = g.num_vertices();
#pragma omp parallel
  {
    auto& buf = buffers[static_cast<std::size_t>(ThreadIndex())];
#pragma omp for schedule(dynamic, 64)
    for (VertexId u = 0; u < n; ++u) {
      EnumerateAt(g, orientation, id, u, buf);
    }
  }
  std::vector<Tuple> all;
  for (auto& b : buffers) all.insert(all.end(), b.begin(), b.end());
  return Flatten(all, size);
}

MotifInstances RestrictInstances(const MotifInstances& instances,
                                 const std::vector<char>& members) {
  MotifInstances out;
  out.size = instances.size;
  for (std::size_t i = 0; i < instances.count(); ++i) {
    auto inst = instances[i];
    if (std::all_of(inst.begin(), inst.end(),
                    [&](VertexId v) { return members[v] != 0; })) {
      out.vertices.insert(out.vertices.end(), inst.begin(), inst.end());
    }
  }
  return out;
}

double MotifAdjacency::at(VertexId i, VertexId j) const {
  auto cols = row_columns(i);
  auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0.0;
  return row_values(i)[static_cast<std::size_t>(it - cols.begin())];
}

MotifAdjacency BuildMotifAdjacency(VertexId n,
                                   const MotifInstances& instances) {
  CheckVertices(n, instances);
  Incidence inc(n, instances);
  std::vector<std::vector<std::pair<VertexId, double>>> rows(
      static_cast<std::size_t>(n));
  // Row i gathers the co-members of i across its incident instances.
#pragma omp parallel for schedule(dynamic, 64)
  for (VertexId i = 0; i < n; ++i) {
    std::vector<VertexId> partners;
    for (std::size_t p = inc.offsets[i]; p < inc.offsets[i + 1]; ++p) {
      for (VertexId j : instances[inc.instances[p]]) {
        if (j != i) partners.push_back(j);
      }
    }
    std::sort(partners.begin(), partners.end());
    auto& row = rows[i];
    for (std::size_t a = 0; a < partners.size();) {
      std::size_t b = a;
      while (b < partners.size() && partners[b] == partners[a]) ++b;
      row.emplace_back(partners[a], static_cast<double>(b - a));
      a = b;
    }
  }
  MotifAdjacency w;
  w.n = n;
  w.row_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId i = 0; i < n; ++i) {
    w.row_offsets[i + 1] = w.row_offsets[i] + rows[i].size();
  }
  w.columns.resize(w.row_offsets.back());
  w.values.resize(w.row_offsets.back());
  w.degree.assign(static_cast<std::size_t>(n), 0.0);
  for (VertexId i = 0; i < n; ++i) {
    std::size_t at = w.row_offsets[i];
    for (const auto& [j, c] : rows[i]) {
      w.columns[at] = j;
      w.values[at++] = c;
      w.degree[i] += c;
    }
  }
  return w;
}

MotifAdjacency BuildMotifAdjacency(const Graph& g, MotifId id) {
  return BuildMotifAdjacency(g.num_vertices(), EnumerateMotifs(g, id));
}

std::optional<double> MotifConductance(const MotifInstances& instances,
                                       const std::vector<char>& in_set) {
  const auto n = in_set.size();
  std::size_t inside = 0;
  for (char c : in_set) inside += c ? 1 : 0;
  if (inside == 0 || inside == n) {
    throw InvalidArgument(
        "motif conductance needs a nonempty set with a nonempty complement");
  }
  std::size_t cut = 0;
  std::size_t vol_in = 0;
  std::size_t vol_out = 0;
  for (std::size_t i = 0; i < instances.count(); ++i) {
    std::size_t k = 0;
    for (VertexId v : instances[i]) k += in_set[v] ? 1 : 0;
    vol_in += k;
    vol_out += instances.size - k;
    if (k > 0 && k < static_cast<std::size_t>(instances.size)) ++cut;
  }
  const std::size_t denom = std::min(vol_in, vol_out);
  if (denom == 0) return std::nullopt;
  return static_cast<double>(cut) / static_cast<double>(denom);
}

std::optional<double> MotifConductance(const Graph& g, MotifId id,
                                       std::span<const VertexId> set) {
  std::vector<char> flags(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : set) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("set member outside the graph");
    }
    flags[v] = 1;
  }
  return MotifConductance(EnumerateMotifs(g, id), flags);
}

namespace serial {

MotifInstances EnumerateMotifs(const Graph& g, MotifId id) {
  Orientation orientation(g);
  std::vector<Tuple> all;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    EnumerateAt(g, orientation, id, u, all);
  }
  return Flatten(all, GetMotif(id).size);
}

MotifAdjacency BuildMotifAdjacency(VertexId n,
                                   const MotifInstances& instances) {
  CheckVertices(n, instances);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < instances.count(); ++i) {
    auto inst = instances[i];
    for (std::size_t a = 0; a < inst.size(); ++a) {
      for (std::size_t b = 0; b < inst.size(); ++b) {
        if (a != b) pairs.emplace_back(inst[a], inst[b]);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  MotifAdjacency w;
  w.n = n;
  w.row_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  w.degree.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t a = 0; a < pairs.size();) {
    std::size_t b = a;
    while (b < pairs.size() && pairs[b] == pairs[a]) ++b;
    w.columns.push_back(pairs[a].second);
    w.values.push_back(static_cast<double>(b - a));
    ++w.row_offsets[pairs[a].first + 1];
    w.degree[pairs[a].first] += static_cast<double>(b - a);
    a = b;
  }
  std::partial_sum(w.row_offsets.begin(), w.row_offsets.end(),
                   w.row_offsets.begin());
  return w;
}

}  // namespace serial

}  // namespace chief
