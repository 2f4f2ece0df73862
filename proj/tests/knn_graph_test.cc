#include "germen/knn_graph.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "testing/batch_oracle.h"

namespace germen {
namespace {

using ::testing::ElementsAre;

std::vector<Link> Vec(std::span<const Link> links) {
  return {links.begin(), links.end()};
}

Config WithK(int k) {
  Config c;
  c.k = k;
  return c;
}

TEST(NeighborGraphTest, FirstNodeHasNoLinks) {
  NeighborGraph g;
  EXPECT_TRUE(g.Insert({}, Config{}).empty());
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.OutLinks(0).empty());
  EXPECT_TRUE(g.InLinks(0).empty());
}

TEST(NeighborGraphTest, ThreeMutuallySimilarNodesFormCompleteGraph) {
  NeighborGraph g;
  const Config config = WithK(3);
  g.Insert({}, config);
  g.Insert(std::vector<double>{0.9}, config);
  const PerturbationSet ll = g.Insert(std::vector<double>{0.9, 0.9}, config);
  EXPECT_EQ(ll, (PerturbationSet{0, 1, 2}));
  EXPECT_EQ(g.link_count(), 6u);
  for (NodeId u = 0; u < 3; ++u) {
    for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.HasLink(u, v), u != v);
  }
}

TEST(NeighborGraphTest, ThresholdIsStrict) {
  NeighborGraph g;
  const Config config;
  g.Insert({}, config);
  g.Insert(std::vector<double>{0.8}, config);
  EXPECT_TRUE(g.Insert(std::vector<double>{0.05, 0.1}, config).empty());
  EXPECT_TRUE(g.OutLinks(2).empty());
  EXPECT_TRUE(g.InLinks(2).empty());
  EXPECT_EQ(g.link_count(), 2u);
}

TEST(NeighborGraphTest, TiesAtTheCutoffAreAllKept) {
  NeighborGraph g;
  const Config config = WithK(2);
  g.Insert({}, config);
  g.Insert(std::vector<double>{0.2}, config);
  g.Insert(std::vector<double>{0.2, 0.2}, config);
  g.Insert(std::vector<double>{0.2, 0.2, 0.2}, config);
  g.Insert(std::vector<double>{0.9, 0.5, 0.5, 0.5}, config);
  EXPECT_EQ(g.OutLinks(4).size(), 4u);
}

TEST(NeighborGraphTest, TruncatedTiesKeepOldest) {
  NeighborGraph g;
  Config config = WithK(2);
  config.ties = TieMode::kTruncate;
  g.Insert({}, config);
  g.Insert(std::vector<double>{0.2}, config);
  g.Insert(std::vector<double>{0.2, 0.2}, config);
  g.Insert(std::vector<double>{0.5, 0.5, 0.5}, config);
  EXPECT_THAT(Vec(g.OutLinks(3)), ElementsAre(Link{0, 0.5}, Link{1, 0.5}));
}

TEST(NeighborGraphTest, DisplacedNeighborLosesItsInLink) {
  NeighborGraph g;
  const Config config = WithK(1);
  g.Insert({}, config);
  g.Insert(std::vector<double>{0.5}, config);
  ASSERT_TRUE(g.HasLink(0, 1));
  // Node 2 is closer to 0 than 1 is; 0 drops its link to 1.
  const PerturbationSet ll = g.Insert(std::vector<double>{0.8, 0.2}, config);
  EXPECT_EQ(ll, (PerturbationSet{0, 1, 2}));
  EXPECT_FALSE(g.HasLink(0, 1));
  EXPECT_TRUE(g.HasLink(0, 2));
  EXPECT_TRUE(g.HasLink(2, 0));
  EXPECT_TRUE(g.HasLink(1, 0));
  EXPECT_THAT(Vec(g.InLinks(1)), ElementsAre());
  EXPECT_THAT(Vec(g.InLinks(0)), ElementsAre(Link{1, 0.5}, Link{2, 0.8}));
}

TEST(NeighborGraphTest, PriorNodeGainingOnlyAnInLinkIsPerturbed) {
  NeighborGraph g;
  const Config config = WithK(1);
  g.Insert({}, config);
  g.Insert(std::vector<double>{0.9}, config);
  // 2 prefers 0; 0 and 1 keep each other.
  const PerturbationSet ll = g.Insert(std::vector<double>{0.5, 0.3}, config);
  EXPECT_EQ(ll, (PerturbationSet{0, 2}));
}

TEST(NeighborGraphTest, RejectsWrongSimilarityCount) {
  NeighborGraph g;
  g.Insert({}, Config{});
  EXPECT_THROW(g.Insert(std::vector<double>{0.5, 0.5}, Config{}),
               std::invalid_argument);
}

TEST(NeighborhoodTest, Examples) {
  const NeighborGraph isolated = NeighborGraph::FromOutLinks({{}});
  EXPECT_EQ(isolated.Neighborhood(0, 1), (std::vector<NodeId>{0}));
  EXPECT_EQ(isolated.Neighborhood(0, 2), (std::vector<NodeId>{0}));

  const NeighborGraph single = NeighborGraph::FromOutLinks({{{1, 0.5}}, {}});
  EXPECT_EQ(single.Neighborhood(1, 1), (std::vector<NodeId>{0, 1}));

  // a -> b -> c
  const NeighborGraph path =
      NeighborGraph::FromOutLinks({{{1, 0.5}}, {{2, 0.5}}, {}, {}});
  EXPECT_EQ(path.Neighborhood(0, 1), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(path.Neighborhood(0, 2), (std::vector<NodeId>{0, 1, 2}));
  EXPECT_THROW(path.Neighborhood(7, 1), std::out_of_range);
  EXPECT_THROW(path.Neighborhood(0, 3), std::invalid_argument);
}

TEST(NeighborGraphTest, FromOutLinksValidates) {
  EXPECT_THROW(NeighborGraph::FromOutLinks({{{0, 0.5}}}),
               std::invalid_argument);
  EXPECT_THROW(NeighborGraph::FromOutLinks({{{3, 0.5}}}),
               std::invalid_argument);
  EXPECT_THROW(NeighborGraph::FromOutLinks({{{2, 0.5}, {1, 0.5}}, {}, {}}),
               std::invalid_argument);
  const NeighborGraph g =
      NeighborGraph::FromOutLinks({{{1, 0.5}, {2, 0.4}}, {{0, 0.5}}, {}});
  EXPECT_THAT(Vec(g.InLinks(0)), ElementsAre(Link{1, 0.5}));
  EXPECT_EQ(g.link_count(), 3u);
}

// Random symmetric similarity matrices on a coarse grid so ties are common.
TEST(NeighborGraphPropertyTest, MatchesBruteForceAfterEveryInsertion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> grid(0, 12);
  for (int trial = 0; trial < 40; ++trial) {
    Config config;
    config.k = 1 + trial % 4;
    const std::size_t n = 10 + trial % 30;
    std::vector<std::vector<double>> sims(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        sims[a][b] = sims[b][a] = grid(rng) / 12.0;
      }
    }
    NeighborGraph g;
    for (NodeId v = 0; v < n; ++v) {
      std::vector<double> row(sims[v].begin(), sims[v].begin() + v);
      std::vector<std::vector<Link>> before;
      for (NodeId u = 0; u < v; ++u) {
        before.emplace_back(g.OutLinks(u).begin(), g.OutLinks(u).end());
      }
      g.Insert(row, config);

      std::vector<std::vector<double>> prefix(v + 1);
      for (NodeId a = 0; a <= v; ++a) {
        prefix[a].assign(sims[a].begin(), sims[a].begin() + v + 1);
      }
      for (NodeId u = 0; u <= v; ++u) {
        const auto expected = testing::BruteForceNearest(prefix, u, config);
        ASSERT_EQ(std::vector<Link>(g.OutLinks(u).begin(), g.OutLinks(u).end()),
                  expected)
            << "trial " << trial << " node " << u << " after " << v;
        for (const Link& l : g.OutLinks(u)) {
          EXPECT_TRUE(std::find(g.InLinks(l.node).begin(),
                                g.InLinks(l.node).end(),
                                Link{u, l.similarity}) !=
                      g.InLinks(l.node).end());
        }
      }
      // Only links to displaced nodes disappear, and only from nodes that
      // now link to the newcomer.
      for (NodeId u = 0; u < v; ++u) {
        for (const Link& old : before[u]) {
          if (!g.HasLink(u, old.node)) {
            EXPECT_TRUE(g.HasLink(u, v));
            EXPECT_GE(sims[u][v], old.similarity);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace germen
