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

#include <set>

#include <gtest/gtest.h>

#include "chief/error.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace chief {
namespace {

std::set<std::vector<VertexId>> Family(const ClusterSet& s) {
  std::set<std::vector<VertexId>> f;
  for (const Cluster& c : s.clusters) f.insert(c.members);
  return f;
}

void ExpectPartition(const Graph& g, const ClusterSet& s) {
  std::vector<int> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Cluster& c : s.clusters) {
    EXPECT_FALSE(c.members.empty());
    EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
    for (VertexId v : c.members) ++seen[v];
  }
  for (VertexId v : s.unclustered) ++seen[v];
  for (int x : seen) EXPECT_EQ(x, 1);
  for (std::size_t i = 1; i < s.clusters.size(); ++i) {
    EXPECT_LT(s.clusters[i - 1].members.front(),
              s.clusters[i].members.front());
  }
}

// K5 on {0..4} and K5 on {5..9}; the diamond {2,3,4,5} has its chord (3,4)
// in the first clique and crosses over through (3,5) and (4,5). Vertex 2 is
// kept away from 5 so the four vertices induce a diamond.
Graph DiamondAcrossTwoCut() {
  std::vector<Edge> e;
  for (int base : {0, 5}) {
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) e.push_back({base + u, base + v});
    }
  }
  e.push_back({3, 5});
  e.push_back({4, 5});
  return Graph::FromEdges(10, e);
}

TEST(ClassifyTest, Regimes) {
  EXPECT_EQ(ClassifyMode(MotifId::kM46, 3), Regime::kExact);
  EXPECT_EQ(ClassifyMode(MotifId::kM46, 4), Regime::kApprox);
  EXPECT_EQ(ClassifyMode(MotifId::kM32, 2), Regime::kExact);
  EXPECT_EQ(ClassifyMode(MotifId::kM44, 2), Regime::kApprox);
}

TEST(ModeTest, NamesRoundTrip) {
  for (Mode m : {Mode::kAuto, Mode::kExact, Mode::kApprox, Mode::kBaseline}) {
    EXPECT_EQ(ParseMode(ModeName(m)), m);
  }
  EXPECT_FALSE(ParseMode("fast").has_value());
}

TEST(PruneTest, CliqueUnchanged) {
  PruneResult p = Prune(oracle::Complete(4), 3, 0.0);
  EXPECT_TRUE(p.removed_vertices.empty());
  EXPECT_EQ(p.graph.num_edges(), 6u);
}

TEST(PruneTest, StarFullyRemoved) {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  PruneResult p = Prune(Graph::FromEdges(5, e), 2, 0.0);
  EXPECT_EQ(p.removed_vertices.size(), 5u);
  EXPECT_EQ(p.graph.num_edges(), 0u);
  EXPECT_EQ(p.removed_edges, 4u);
}

TEST(PruneTest, KOneRemovesOnlyIsolated) {
  std::vector<Edge> e{{0, 1}, {1, 2}};
  PruneResult p = Prune(Graph::FromEdges(4, e), 1, 0.0);
  EXPECT_EQ(p.removed_vertices, (std::vector<VertexId>{3}));
  EXPECT_EQ(p.graph.num_edges(), 2u);
}

TEST(PruneTest, WeightThreshold) {
  std::vector<Edge> e{{0, 1, 0.5}, {1, 2, 2.0}, {0, 2, 2.0}};
  PruneResult p = Prune(Graph::FromEdges(3, e), 1, 1.0);
  EXPECT_EQ(p.graph.num_edges(), 2u);
  EXPECT_TRUE(p.removed_vertices.empty());
}

TEST(RunChiefTest, BarbellExact) {
  ChiefConfig c;
  c.motif = MotifId::kM46;
  c.k = 3;
  ChiefResult r = RunChief(oracle::Barbell(), c);
  using V = std::vector<VertexId>;
  EXPECT_EQ(Family(r.clusters), (std::set<V>{{0, 1, 2, 3}, {4, 5, 6, 7}}));
  EXPECT_EQ(r.stats.mode, "st");
  EXPECT_TRUE(r.stats.exact);
  EXPECT_EQ(r.stats.pieces, 2);

  c.mode = Mode::kBaseline;
  ChiefResult b = RunChief(oracle::Barbell(), c);
  EXPECT_EQ(Family(b.clusters), Family(r.clusters));
  EXPECT_EQ(b.stats.mode, "baseline");
}

TEST(RunChiefTest, BaselineFindsBarbellSpectrally) {
  ChiefConfig c;
  c.motif = MotifId::kM32;
  c.mode = Mode::kBaseline;
  c.min_cluster_size = 4;
  ChiefResult r = RunChief(oracle::Barbell(), c);
  using V = std::vector<VertexId>;
  EXPECT_EQ(Family(r.clusters), (std::set<V>{{0, 1, 2, 3}, {4, 5, 6, 7}}));
  EXPECT_GE(r.stats.eigensolves, 1);
}

TEST(RunChiefTest, PartitionIntegrity) {
  std::mt19937_64 rng(1717);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::RandomGraph(60, 0.12, rng);
    for (MotifId id : {MotifId::kM32, MotifId::kM44, MotifId::kM46}) {
      for (Mode m : {Mode::kAuto, Mode::kBaseline}) {
        ChiefConfig c;
        c.motif = id;
        c.k = 3;
        c.mode = m;
        ChiefResult r = RunChief(g, c);
        ExpectPartition(g, r.clusters);
        EXPECT_EQ(r.stats.clusters,
                  static_cast<std::int64_t>(r.clusters.clusters.size()));
        for (const Cluster& cl : r.clusters.clusters) {
          EXPECT_GE(cl.conductance, 0.0);
          EXPECT_LE(cl.conductance, c.max_conductance);
        }
      }
    }
  }
}

TEST(RunChiefTest, ExactModeMatchesBaseline) {
  std::mt19937_64 rng(1818);
  const std::pair<MotifId, int> cases[] = {{MotifId::kM32, 2},
                                           {MotifId::kM46, 3},
                                           {MotifId::kM45, 2},
                                           {MotifId::kM43, 2}};
  for (int t = 0; t < 60; ++t) {
    const int n = 4 + static_cast<int>(rng() % 9);
    Graph g = oracle::RandomGraph(n, 0.5, rng);
    for (auto [id, k] : cases) {
      ChiefConfig c;
      c.motif = id;
      c.k = k;
      ChiefResult chief = RunChief(g, c);
      c.mode = Mode::kBaseline;
      ChiefResult base = RunChief(g, c);
      EXPECT_EQ(Family(chief.clusters), Family(base.clusters))
          << "trial " << t << " motif " << GetMotif(id).name;
      EXPECT_EQ(chief.clusters.unclustered, base.clusters.unclustered);
    }
  }
}

TEST(RunChiefTest, ChiefEnumeratesNoMoreThanBaseline) {
  std::mt19937_64 rng(1919);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::RandomGraph(50, 0.15, rng);
    for (MotifId id : AllMotifs()) {
      ChiefConfig c;
      c.motif = id;
      c.k = 3;
      ChiefResult chief = RunChief(g, c);
      c.mode = Mode::kBaseline;
      ChiefResult base = RunChief(g, c);
      EXPECT_LE(chief.stats.instances, base.stats.instances);
    }
  }
}

TEST(RunChiefTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(2020);
  for (int t = 0; t < 5; ++t) {
    Graph g = oracle::RandomGraph(150, 0.06, rng);
    ChiefConfig c;
    c.motif = MotifId::kM32;
    c.k = 2;
    ChiefResult a = RunChief(g, c);
    c.parallel = false;
    ChiefResult b = RunChief(g, c);
    ASSERT_EQ(a.clusters.clusters.size(), b.clusters.clusters.size());
    for (std::size_t i = 0; i < a.clusters.clusters.size(); ++i) {
      EXPECT_EQ(a.clusters.clusters[i].members, b.clusters.clusters[i].members);
      EXPECT_EQ(a.clusters.clusters[i].conductance,
                b.clusters.clusters[i].conductance);
    }
    EXPECT_EQ(a.clusters.unclustered, b.clusters.unclustered);
  }
}

TEST(RunChiefTest, StartsFromBaseDecomposition) {
  std::mt19937_64 rng(2121);
  for (int t = 0; t < 10; ++t) {
    Graph g = oracle::RandomGraph(40, 0.2, rng);
    ChiefConfig c;
    c.motif = MotifId::kM32;
    c.k = 3;
    ChiefResult direct = RunChief(g, c);
    c.base = Decompose(g, 2);
    ChiefResult reused = RunChief(g, c);
    EXPECT_EQ(Family(direct.clusters), Family(reused.clusters));
  }
}

TEST(RunChiefTest, StatsSerialize) {
  ChiefConfig c;
  c.motif = MotifId::kM46;
  ChiefResult r = RunChief(oracle::Barbell(), c);
  auto j = nlohmann::json::parse(r.stats.ToJson());
  EXPECT_EQ(j["mode"], "st");
  EXPECT_EQ(j["clusters"], 2);
  EXPECT_TRUE(j["phase_ms"].contains("decompose"));
  EXPECT_NE(r.stats.ToKeyValue().find("clusters 2"), std::string::npos);
}

TEST(PreservationTest, ExactRegimeHolds) {
  std::mt19937_64 rng(2222);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::RandomGraph(30, 0.25, rng);
    EXPECT_TRUE(StPreservationCheck(g, MotifId::kM46, 3));
    EXPECT_TRUE(StPreservationCheck(g, MotifId::kM32, 2));
  }
  EXPECT_THROW(StPreservationCheck(oracle::Barbell(), MotifId::kM44, 2),
               Error);
}

TEST(PreservationTest, DiamondBrokenByLightCut) {
  Graph g = DiamondAcrossTwoCut();
  std::vector<VertexId> diamond{2, 3, 4, 5};
  EXPECT_EQ(MotifConductance(g, MotifId::kM45, diamond).has_value(), true);
  auto all = EnumerateMotifs(g, MotifId::kM45);
  bool found = false;
  for (std::size_t i = 0; i < all.count(); ++i) {
    found |= std::vector<VertexId>(all[i].begin(), all[i].end()) == diamond;
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(MotifsPreservedByDecomposition(g, MotifId::kM45, 3));
  EXPECT_TRUE(MotifsPreservedByDecomposition(g, MotifId::kM45, 2));
}

}  // namespace
}  // namespace chief
