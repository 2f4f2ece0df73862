#include "germen/density.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>

namespace germen {
namespace {

NeighborGraph MutualPair(double s) {
  return NeighborGraph::FromOutLinks({{{1, s}}, {{0, s}}});
}

NeighborGraph FullTriangle(double s) {
  return NeighborGraph::FromOutLinks(
      {{{1, s}, {2, s}}, {{0, s}, {2, s}}, {{0, s}, {1, s}}});
}

TEST(DensityTest, IsolatedNodeIsZero) {
  const NeighborGraph g = NeighborGraph::FromOutLinks({{}});
  EXPECT_EQ(SumDensity(g, 0), 0.0);
  EXPECT_EQ(ClusteringCoefficientDensity(g, 0), 0.0);
}

TEST(DensityTest, ReciprocalPairCountsTwice) {
  const NeighborGraph g = MutualPair(0.8);
  EXPECT_DOUBLE_EQ(SumDensity(g, 0), 1.6);
  EXPECT_DOUBLE_EQ(SumDensity(g, 1), 1.6);
  EXPECT_DOUBLE_EQ(ClusteringCoefficientDensity(g, 0), 0.8);
}

TEST(DensityTest, FullTriangle) {
  const NeighborGraph g = FullTriangle(0.5);
  for (NodeId v = 0; v < 3; ++v) {
    EXPECT_DOUBLE_EQ(SumDensity(g, v), 3.0);
    EXPECT_DOUBLE_EQ(ClusteringCoefficientDensity(g, v), 0.5);
    EXPECT_DOUBLE_EQ(Density(g, v, DensityMode::kClusteringCoefficient), 0.5);
  }
}

TEST(DensityTest, CountsLinksBetweenNeighborsNotIncidentToTheNode) {
  // 0 -> 1, 0 -> 2, 1 -> 2, and 3 -> 2 outside 0's neighborhood.
  const NeighborGraph g = NeighborGraph::FromOutLinks(
      {{{1, 0.5}, {2, 0.25}}, {{2, 0.125}}, {}, {{2, 0.75}}});
  EXPECT_DOUBLE_EQ(SumDensity(g, 0), 0.875);
  // 2's neighborhood is everyone.
  EXPECT_DOUBLE_EQ(SumDensity(g, 2), 1.625);
  // 3 sees only 3 -> 2.
  EXPECT_DOUBLE_EQ(SumDensity(g, 3), 0.75);
}

TEST(DensityLandscapeTest, EmptyPerturbationChangesNothing) {
  NeighborGraph g;
  DensityLandscape d;
  g.Insert({}, Config{});
  d.AddNode();
  EXPECT_TRUE(d.Update(g, {}, DensityMode::kSum).empty());
}

TEST(DensityLandscapeTest, MutualLinkToIsolatedNodeRaisesBoth) {
  NeighborGraph g;
  DensityLandscape d;
  const Config config;
  g.Insert({}, config);
  d.AddNode();
  const PerturbationSet ll = g.Insert(std::vector<double>{0.6}, config);
  d.AddNode();
  EXPECT_EQ(d.Update(g, ll, DensityMode::kSum), (std::vector<NodeId>{0, 1}));
  EXPECT_DOUBLE_EQ(d.at(0), 1.2);
  EXPECT_DOUBLE_EQ(d.at(1), 1.2);
}

TEST(DensityLandscapeTest, NodeBelowThresholdChangesNothing) {
  NeighborGraph g;
  DensityLandscape d;
  const Config config;
  g.Insert({}, config);
  d.AddNode();
  const PerturbationSet first = g.Insert(std::vector<double>{0.6}, config);
  d.AddNode();
  d.Update(g, first, DensityMode::kSum);
  const PerturbationSet ll = g.Insert(std::vector<double>{0.1, 0.02}, config);
  d.AddNode();
  EXPECT_TRUE(d.Update(g, ll, DensityMode::kSum).empty());
  EXPECT_EQ(d.at(2), 0.0);
}

TEST(DensityLandscapePropertyTest, IncrementalMatchesFullRecomputation) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Config config;
    config.k = 1 + trial % 4;
    const DensityMode mode = trial % 2 ? DensityMode::kSum
                                       : DensityMode::kClusteringCoefficient;
    const std::size_t n = 40;
    std::vector<std::vector<double>> sims(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) sims[a][b] = sims[b][a] = u(rng);
    }
    NeighborGraph g;
    DensityLandscape d;
    for (NodeId v = 0; v < n; ++v) {
      const PerturbationSet ll = g.Insert(
          std::vector<double>(sims[v].begin(), sims[v].begin() + v), config);
      d.AddNode();
      d.Update(g, ll, mode);
      for (NodeId w = 0; w <= v; ++w) {
        ASSERT_EQ(std::bit_cast<std::uint64_t>(d.at(w)),
                  std::bit_cast<std::uint64_t>(Density(g, w, mode)))
            << "node " << w << " after inserting " << v;
      }
    }
  }
}

}  // namespace
}  // namespace germen
