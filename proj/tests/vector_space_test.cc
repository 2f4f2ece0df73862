#include "germen/vector_space.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <algorithm>

namespace germen {
namespace {

DocumentVector Doc(std::vector<TermCount> counts) {
  return DocumentVector("d", 0, std::move(counts));
}

TEST(DescriptorRegistryTest, AssignsDenseIdsInFirstSeenOrder) {
  DescriptorRegistry registry;
  EXPECT_EQ(registry.Intern("roche"), 0u);
  EXPECT_EQ(registry.Intern("sol"), 1u);
  EXPECT_EQ(registry.Intern("  roche\t"), 0u);
  EXPECT_EQ(registry.size(), 2u);
  EXPECT_EQ(registry.Name(1), "sol");
  DescriptorId id = 99;
  EXPECT_TRUE(registry.Find("sol", &id));
  EXPECT_EQ(id, 1u);
  EXPECT_FALSE(registry.Find("Sol", &id));  // no case folding
  EXPECT_THROW(registry.Intern("   "), std::invalid_argument);
}

TEST(DocumentVectorTest, KeepsCountsSortedAndTotals) {
  DocumentVector doc("d1", 4, {{7, 2}, {1, 3}});
  ASSERT_EQ(doc.counts().size(), 2u);
  EXPECT_EQ(doc.counts()[0].descriptor, 1u);
  EXPECT_EQ(doc.total(), 5u);
  EXPECT_EQ(doc.arrival_index(), 4u);
  EXPECT_THROW(DocumentVector("d", 0, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(DocumentVector("d", 0, {{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST(NormalizeTest, SingleDescriptorIsUnit) {
  const NormalizedVector y = Normalize(Doc({{0, 1}}));
  ASSERT_EQ(y.size(), 1u);
  EXPECT_DOUBLE_EQ(y.components()[0].value, 1.0);
}

TEST(NormalizeTest, SquareRootOfRelativeFrequency) {
  const NormalizedVector y = Normalize(Doc({{0, 1}, {1, 3}}));
  EXPECT_NEAR(y.ValueOf(0), 0.5, 1e-7);
  EXPECT_NEAR(y.ValueOf(1), 0.8660254, 1e-7);
  const NormalizedVector z = Normalize(Doc({{0, 2}, {1, 2}}));
  EXPECT_NEAR(z.ValueOf(0), 0.7071068, 1e-7);
  EXPECT_NEAR(z.ValueOf(1), 0.7071068, 1e-7);
  EXPECT_EQ(z.ValueOf(5), 0.0);
}

TEST(NormalizeTest, RejectsEmptyDocument) {
  EXPECT_THROW(Normalize(Doc({})), EmptyDocumentError);
}

TEST(SimilarityTest, Examples) {
  const NormalizedVector ab = Normalize(Doc({{0, 1}, {1, 1}}));
  const NormalizedVector a = Normalize(Doc({{0, 1}}));
  const NormalizedVector c = Normalize(Doc({{2, 5}}));
  EXPECT_NEAR(Similarity(ab, ab), 1.0, 1e-15);
  EXPECT_EQ(Similarity(a, c), 0.0);
  EXPECT_NEAR(Similarity(ab, a), 0.7071068, 1e-7);
}

TEST(HellingerDistanceTest, Examples) {
  const NormalizedVector a = Normalize(Doc({{0, 1}}));
  const NormalizedVector b = Normalize(Doc({{1, 1}}));
  EXPECT_NEAR(HellingerDistance(a, a), 0.0, 1e-7);
  EXPECT_NEAR(HellingerDistance(a, b), std::sqrt(2.0), 1e-15);
  // cos = 0.5: {a:1} against {a:1, b:3} has cos sqrt(1/4).
  const NormalizedVector mix = Normalize(Doc({{0, 1}, {1, 3}}));
  EXPECT_NEAR(Similarity(a, mix), 0.5, 1e-15);
  EXPECT_NEAR(HellingerDistance(a, mix), 1.0, 1e-15);
}

NormalizedVector RandomVector(std::mt19937_64& rng, int dims, int terms) {
  std::uniform_int_distribution<int> pick(0, dims - 1);
  std::uniform_int_distribution<std::uint32_t> count(1, 9);
  std::map<DescriptorId, std::uint32_t> counts;
  while (static_cast<int>(counts.size()) < terms) {
    counts.emplace(static_cast<DescriptorId>(pick(rng)), count(rng));
  }
  std::vector<TermCount> tc;
  for (auto [d, c] : counts) tc.push_back({d, c});
  return Normalize(Doc(tc));
}

TEST(SimilarityPropertyTest, SymmetricBoundedAndUnitNorm) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const NormalizedVector u = RandomVector(rng, 30, 1 + trial % 8);
    const NormalizedVector v = RandomVector(rng, 30, 1 + trial % 5);
    const double s = Similarity(u, v);
    EXPECT_EQ(s, Similarity(v, u));  // bitwise
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    double norm = 0.0;
    for (const auto& c : u.components()) norm += c.value * c.value;
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(SimilarityPropertyTest, ScalingCountsLeavesProfileUnchanged) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> count(1, 50);
  std::uniform_int_distribution<std::uint32_t> factor(2, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TermCount> base, scaled;
    const std::uint32_t f = factor(rng);
    for (DescriptorId d = 0; d < 1 + trial % 9; ++d) {
      const std::uint32_t c = count(rng);
      base.push_back({d * 3, c});
      scaled.push_back({d * 3, c * f});
    }
    const NormalizedVector a = Normalize(Doc(base));
    const NormalizedVector b = Normalize(Doc(scaled));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(a.components()[i].value, b.components()[i].value, 1e-12);
    }
  }
}

TEST(CanonicalSumTest, IndependentOfInputOrder) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs;
  for (int i = 0; i < 200; ++i) xs.push_back(u(rng) * std::pow(10.0, i % 7));
  const double expected = CanonicalSum(xs);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(xs.begin(), xs.end(), rng);
    EXPECT_EQ(CanonicalSum(xs), expected);
  }
}

}  // namespace
}  // namespace germen
