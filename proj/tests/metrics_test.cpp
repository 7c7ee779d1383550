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

#include <gtest/gtest.h>

#include "chief/error.hpp"
#include "oracles.hpp"

namespace chief {
namespace {

Graph TwoTriangles() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph::FromEdges(6, e);
}

TEST(ModularityTest, SingleClusterIsZero) {
  std::mt19937_64 rng(1);
  Graph g = oracle::RandomConnectedGraph(20, 0.2, rng);
  VertexSets one(1);
  for (VertexId v = 0; v < 20; ++v) one[0].push_back(v);
  EXPECT_NEAR(Modularity(g, one), 0.0, 1e-15);
}

TEST(ModularityTest, TwoTriangles) {
  VertexSets two{{0, 1, 2}, {3, 4, 5}};
  EXPECT_DOUBLE_EQ(Modularity(TwoTriangles(), two), 0.5);
}

TEST(ModularityTest, TwoClusterFormMatchesDoubleSum) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + static_cast<int>(rng() % 27);
    Graph g = oracle::RandomGraph(n, 0.3, rng);
    VertexSets two(2);
    for (VertexId v = 0; v < n; ++v) {
      const auto r = rng() % 5;
      if (r < 2) two[0].push_back(v);
      if (r >= 2 && r < 4) two[1].push_back(v);
    }
    double brute;
    try {
      brute = oracle::TwoClusterModularity(g, two);
    } catch (...) {
      continue;
    }
    double q;
    try {
      q = Modularity(g, two);
    } catch (const Error&) {
      continue;  // no clustered edge
    }
    EXPECT_NEAR(q, brute, 1e-12) << "trial " << t;
    EXPECT_GE(q, -1.0);
    EXPECT_LE(q, 1.0);
  }
}

TEST(ModularityTest, ThreeClusters) {
  VertexSets three{{0, 1, 2}, {3, 4}, {5}};
  const double m = 5.0;  // edges among clustered vertices: 3 + 1 + 0 + 1 cross
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {2, 3}};
  Graph g = Graph::FromEdges(6, e);
  const double d0 = 7.0, d1 = 3.0, d2 = 0.0;
  const double expected = 3.0 / m - (d0 / 10) * (d0 / 10) + 1.0 / m -
                          (d1 / 10) * (d1 / 10) - (d2 / 10) * (d2 / 10);
  EXPECT_NEAR(Modularity(g, three), expected, 1e-15);
}

TEST(ModularityTest, Errors) {
  std::vector<Edge> none;
  Graph empty = Graph::FromEdges(3, none);
  EXPECT_THROW(Modularity(empty, VertexSets{{0}, {1, 2}}), Error);
  EXPECT_THROW(Modularity(TwoTriangles(), VertexSets{{0, 1}, {1, 2}}), Error);
}

TEST(CiiTest, Values) {
  EXPECT_DOUBLE_EQ(Cii(25, 40, 5), 0.025);
  EXPECT_DOUBLE_EQ(Cii(25, 5, 5), 0.2);
  EXPECT_DOUBLE_EQ(Cii(7, 7, 7), 1.0);
  EXPECT_DOUBLE_EQ(Cii(40, 25, 5), Cii(25, 40, 5));
}

TEST(CiiTest, Errors) {
  EXPECT_THROW(Cii(0, 5, 0), Error);
  EXPECT_THROW(Cii(5, 3, 4), Error);
  EXPECT_THROW(Cii(5, 5, -1), Error);
}

TEST(CiiTest, Table) {
  std::vector<std::int64_t> papers{25, 40, 5};
  std::vector<CoPaperCount> pairs{{1, 0, 5}, {0, 2, 5}};
  auto table = CiiTable(papers, pairs);
  EXPECT_DOUBLE_EQ(table.at({0, 1}), 0.025);
  EXPECT_DOUBLE_EQ(table.at({0, 2}), 0.2);
}

TEST(CcpTest, Examples) {
  std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  Graph s = Graph::FromEdges(5, star);
  std::vector<VertexId> all{0, 1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(*Ccp(s, all), 0.8);
  std::vector<VertexId> one{3};
  EXPECT_DOUBLE_EQ(*Ccp(s, one), 0.0);
  for (int t = 2; t <= 7; ++t) {
    Graph k = oracle::Complete(t);
    std::vector<VertexId> members;
    for (int v = 0; v < t; ++v) members.push_back(v);
    EXPECT_DOUBLE_EQ(*Ccp(k, members), (t - 1.0) / t);
  }
}

TEST(CcpTest, DisconnectedIsUndefined) {
  std::vector<VertexId> split{0, 3};
  EXPECT_FALSE(Ccp(TwoTriangles(), split).has_value());
}

TEST(CcpTest, CenterTies) {
  Graph k4 = oracle::Complete(4);
  std::vector<VertexId> members{3, 1, 2};
  EXPECT_EQ(ClusterCenter(k4, members), 1);
  CenterOptions seeded;
  seeded.tie_seed = 99;
  VertexId c = ClusterCenter(k4, members, seeded);
  EXPECT_TRUE(c == 1 || c == 2 || c == 3);
  EXPECT_EQ(ClusterCenter(k4, members, seeded), c);
}

TEST(CspTest, Examples) {
  std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  Graph p = Graph::FromEdges(4, path);
  CspResult two = Csp(p, VertexSets{{0}, {1}});
  EXPECT_DOUBLE_EQ(*two.value, 1.0);
  CspResult three = Csp(p, VertexSets{{0}, {1}, {3}});
  // distances 1, 3, 2
  EXPECT_DOUBLE_EQ(*three.value, 2.0);
  CspResult relabeled = Csp(p, VertexSets{{3}, {0}, {1}});
  EXPECT_DOUBLE_EQ(*relabeled.value, 2.0);

  CspResult apart = Csp(TwoTriangles(), VertexSets{{0, 1, 2}, {3, 4, 5}});
  EXPECT_FALSE(apart.value.has_value());
  EXPECT_EQ(apart.disconnected_pairs, 1u);
  EXPECT_EQ(apart.included_pairs, 0u);
  EXPECT_THROW(Csp(p, VertexSets{{0}}), Error);
}

TEST(EvaluateTest, Combined) {
  ClusterMetrics m =
      Evaluate(oracle::Barbell(), VertexSets{{0, 1, 2, 3}, {4, 5, 6, 7}});
  ASSERT_TRUE(m.modularity.has_value());
  EXPECT_NEAR(*m.modularity, 12.0 / 14 - 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(*m.avg_ccp, 0.75);
  EXPECT_DOUBLE_EQ(*m.csp.value, 1.0);
  EXPECT_EQ(m.undefined_ccp, 0u);
}

}  // namespace
}  // namespace chief
