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

#include <set>

#include <gtest/gtest.h>

#include "chief/error.hpp"
#include "oracles.hpp"

namespace chief {
namespace {

std::set<std::vector<VertexId>> AsSet(const MotifInstances& inst) {
  std::set<std::vector<VertexId>> s;
  for (std::size_t i = 0; i < inst.count(); ++i) {
    s.emplace(inst[i].begin(), inst[i].end());
  }
  return s;
}

TEST(MotifCatalogTest, MinimumDegrees) {
  EXPECT_EQ(GetMotif(MotifId::kM32).min_degree, 2);
  EXPECT_EQ(GetMotif(MotifId::kM42).min_degree, 1);
  EXPECT_EQ(GetMotif(MotifId::kM43).min_degree, 2);
  EXPECT_EQ(GetMotif(MotifId::kM44).min_degree, 1);
  EXPECT_EQ(GetMotif(MotifId::kM45).min_degree, 2);
  EXPECT_EQ(GetMotif(MotifId::kM46).min_degree, 3);
  EXPECT_EQ(AllMotifs().size(), 6u);
}

TEST(MotifCatalogTest, Parse) {
  EXPECT_EQ(ParseMotif("M46"), MotifId::kM46);
  EXPECT_EQ(ParseMotif("m32"), MotifId::kM32);
  EXPECT_FALSE(ParseMotif("M31").has_value());
  EXPECT_FALSE(ParseMotif("M99").has_value());
}

TEST(EnumerateTest, SmallCliques) {
  EXPECT_EQ(EnumerateMotifs(oracle::Complete(3), MotifId::kM32).count(), 1u);
  Graph k4 = oracle::Complete(4);
  EXPECT_EQ(EnumerateMotifs(k4, MotifId::kM32).count(), 4u);
  EXPECT_EQ(EnumerateMotifs(k4, MotifId::kM45).count(), 0u);
  EXPECT_EQ(EnumerateMotifs(k4, MotifId::kM46).count(), 1u);
}

TEST(EnumerateTest, CliqueCountsAreBinomial) {
  Graph k7 = oracle::Complete(7);
  EXPECT_EQ(EnumerateMotifs(k7, MotifId::kM32).count(), 35u);
  EXPECT_EQ(EnumerateMotifs(k7, MotifId::kM46).count(), 35u);
  for (MotifId id : {MotifId::kM42, MotifId::kM43, MotifId::kM44,
                     MotifId::kM45}) {
    EXPECT_EQ(EnumerateMotifs(k7, id).count(), 0u);
  }
}

TEST(EnumerateTest, MatchesBruteForce) {
  std::mt19937_64 rng(808);
  for (int t = 0; t < 120; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double p = 0.15 + 0.7 * (rng() % 100) / 100.0;
    Graph g = oracle::RandomGraph(n, p, rng);
    for (MotifId id : AllMotifs()) {
      MotifInstances inst = EnumerateMotifs(g, id);
      EXPECT_EQ(AsSet(inst), oracle::Motifs(g, id))
          << "trial " << t << " motif " << GetMotif(id).name;
      EXPECT_EQ(AsSet(inst).size(), inst.count());
    }
  }
}

TEST(EnumerateTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(909);
  for (int t = 0; t < 10; ++t) {
    Graph g = oracle::RandomGraph(80, 0.12, rng);
    for (MotifId id : AllMotifs()) {
      EXPECT_EQ(EnumerateMotifs(g, id).vertices,
                serial::EnumerateMotifs(g, id).vertices);
    }
  }
}

TEST(MotifAdjacencyTest, Cliques) {
  MotifAdjacency w3 = BuildMotifAdjacency(oracle::Complete(3), MotifId::kM32);
  for (VertexId i = 0; i < 3; ++i) {
    EXPECT_EQ(w3.degree[i], 2.0);
    for (VertexId j = 0; j < 3; ++j) EXPECT_EQ(w3.at(i, j), i == j ? 0 : 1);
  }
  MotifAdjacency w4 = BuildMotifAdjacency(oracle::Complete(4), MotifId::kM32);
  for (VertexId i = 0; i < 4; ++i) {
    EXPECT_EQ(w4.degree[i], 6.0);
    for (VertexId j = 0; j < 4; ++j) EXPECT_EQ(w4.at(i, j), i == j ? 0 : 2);
  }
  std::vector<Edge> path{{0, 1}, {1, 2}};
  MotifAdjacency w0 =
      BuildMotifAdjacency(Graph::FromEdges(3, path), MotifId::kM32);
  EXPECT_EQ(w0.nonzeros(), 0u);
}

TEST(MotifAdjacencyTest, RowSumsAndSerialReference) {
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 10; ++t) {
    Graph g = oracle::RandomGraph(60, 0.15, rng);
    for (MotifId id : AllMotifs()) {
      MotifInstances inst = EnumerateMotifs(g, id);
      MotifAdjacency w = BuildMotifAdjacency(g.num_vertices(), inst);
      MotifAdjacency r = serial::BuildMotifAdjacency(g.num_vertices(), inst);
      EXPECT_EQ(w.row_offsets, r.row_offsets);
      EXPECT_EQ(w.columns, r.columns);
      EXPECT_EQ(w.values, r.values);
      EXPECT_EQ(w.degree, r.degree);
      double total = 0.0;
      for (double x : w.values) total += x;
      const int s = GetMotif(id).size;
      EXPECT_EQ(total, static_cast<double>(s * (s - 1)) * inst.count());
      for (VertexId i = 0; i < g.num_vertices(); ++i) {
        auto cols = w.row_columns(i);
        for (std::size_t c = 0; c < cols.size(); ++c) {
          EXPECT_EQ(w.at(cols[c], i), w.row_values(i)[c]);
        }
      }
    }
  }
}

TEST(MotifConductanceTest, DisjointTriangles) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  Graph g = Graph::FromEdges(6, e);
  std::vector<VertexId> s{0, 1, 2};
  EXPECT_EQ(MotifConductance(g, MotifId::kM32, s), 0.0);
}

TEST(MotifConductanceTest, EmptySidesRejected) {
  Graph g = oracle::Complete(3);
  std::vector<VertexId> none;
  std::vector<VertexId> all{0, 1, 2};
  EXPECT_THROW(MotifConductance(g, MotifId::kM32, none), Error);
  EXPECT_THROW(MotifConductance(g, MotifId::kM32, all), Error);
}

TEST(MotifConductanceTest, UndefinedWithoutVolume) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  Graph g = Graph::FromEdges(4, e);
  std::vector<VertexId> s{3};
  EXPECT_FALSE(MotifConductance(g, MotifId::kM32, s).has_value());
}

TEST(MotifConductanceTest, MatchesRecountAndIsSymmetric) {
  std::mt19937_64 rng(1111);
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    Graph g = oracle::RandomGraph(n, 0.5, rng);
    for (MotifId id : {MotifId::kM32, MotifId::kM44, MotifId::kM43}) {
      MotifInstances inst = EnumerateMotifs(g, id);
      auto brute = oracle::Motifs(g, id);
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<char> in(n), out(n);
        for (int i = 0; i < n; ++i) {
          in[i] = mask >> i & 1;
          out[i] = !in[i];
        }
        auto phi = MotifConductance(inst, in);
        EXPECT_EQ(phi, oracle::Conductance(brute, in));
        EXPECT_EQ(phi, MotifConductance(inst, out));
      }
    }
  }
}

}  // namespace
}  // namespace chief
