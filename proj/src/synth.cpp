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

#include "chief/synth.hpp"

#include <sstream>
#include <unordered_set>
#include <vector>

#include "chief/error.hpp"

namespace chief {
namespace {

constexpr int kHalfDegree = 3;
constexpr int kMaxRedraws = 100;

std::uint64_t Key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Uniform double in [0, 1) from the top 53 bits.
double Unit(std::uint64_t& state) {
  return static_cast<double>(SplitMix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string SynthSpec::Describe() const {
  std::ostringstream out;
  out << "nv=" << nv << " ne=" << ne() << " rrp=" << rrp << " seed=" << seed;
  return out.str();
}

Graph GenerateSmallWorld(const SynthSpec& spec) {
  if (spec.nv < 2 * kHalfDegree + 1) {
    throw InvalidArgument("small-world generator needs nv >= 7");
  }
  if (!(spec.rrp >= 0.0 && spec.rrp <= 1.0)) {
    throw InvalidArgument("rewiring probability must lie in [0, 1]");
  }
  const VertexId n = spec.nv;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.ne()));
  for (VertexId u = 0; u < n; ++u) {
    for (int j = 1; j <= kHalfDegree; ++j) {
      edges.push_back({u, static_cast<VertexId>((u + j) % n), 1.0});
    }
  }
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (const Edge& e : edges) present.insert(Key(e.u, e.v));
  std::vector<int> degree(static_cast<std::size_t>(n), 2 * kHalfDegree);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::uint64_t state =
        spec.seed ^
        (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(i) + 1));
    SplitMix64(state);
    if (Unit(state) >= spec.rrp) continue;
    Edge& e = edges[i];
    if (degree[e.u] >= n - 1) continue;  // u is adjacent to everything
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
      auto w = static_cast<VertexId>(SplitMix64(state) %
                                     static_cast<std::uint64_t>(n));
      if (w == e.u || present.count(Key(e.u, w))) continue;
      present.erase(Key(e.u, e.v));
      present.insert(Key(e.u, w));
      --degree[e.v];
      ++degree[w];
      e.v = w;
      break;
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace chief
