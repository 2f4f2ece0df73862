#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <sstream>

#include "germen/corpus_io.h"
#include "germen/snapshot.h"
#include "testing/synthetic.h"

namespace germen {
namespace {

using Terms = std::vector<std::pair<std::string, std::uint32_t>>;

TEST(ParseCorpusLineTest, ReadsTermCounts) {
  const RawDocument d = ParseCorpusLine("doc1\tcat=2\tdog=1");
  EXPECT_EQ(d.doc_id, "doc1");
  EXPECT_EQ(d.terms, (Terms{{"cat", 2}, {"dog", 1}}));
}

TEST(ParseCorpusLineTest, ToleratesCarriageReturnAndTrailingTab) {
  EXPECT_EQ(ParseCorpusLine("d\ta=1\t\r").terms, (Terms{{"a", 1}}));
}

TEST(ParseCorpusLineTest, SplitsOnTheLastEqualsSign) {
  EXPECT_EQ(ParseCorpusLine("d\tx=y=3").terms, (Terms{{"x=y", 3}}));
}

TEST(ParseCorpusLineTest, RejectsMalformedFields) {
  EXPECT_THROW(ParseCorpusLine("d"), EmptyDocumentError);
  for (const char* bad : {"d\ta", "d\ta=0", "d\ta=-1", "d\ta=x", "d\ta=1.5",
                          "d\t=2", "d\ta=1\ta=2", "\ta=1", "d\ta=99999999999"}) {
    EXPECT_THROW(ParseCorpusLine(bad), std::invalid_argument) << bad;
  }
}

TEST(ReadCorpusTest, SkipsBlankLines) {
  std::istringstream in("a\tx=1\n\n   \nb\ty=2\n");
  const auto docs = ReadCorpus(in);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1].doc_id, "b");
}

TEST(ReadCorpusTest, EmptyInputGivesEmptyCorpus) {
  std::istringstream in("");
  EXPECT_TRUE(ReadCorpus(in).empty());
}

TEST(ReadCorpusTest, NamesTheOffendingLine) {
  std::istringstream bad("a\tx=1\n\nb\ty=zz\n");
  try {
    ReadCorpus(bad);
    FAIL();
  } catch (const CorpusFormatError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_THAT(e.what(), ::testing::StartsWith("line 3: "));
  }
  std::istringstream dup("a\tx=1\na\ty=1\n");
  EXPECT_THROW(ReadCorpus(dup), CorpusFormatError);
  std::istringstream empty_doc("a\tx=1\nb\n");
  EXPECT_THROW(ReadCorpus(empty_doc), CorpusFormatError);
}

TEST(FormatCorpusLineTest, RoundTrips) {
  const RawDocument d{"id 7", {{"a", 3}, {"b=c", 1}}};
  const RawDocument back = ParseCorpusLine(FormatCorpusLine(d));
  EXPECT_EQ(back.doc_id, d.doc_id);
  EXPECT_EQ(back.terms, d.terms);
}

std::vector<RawDocument> Corpus(std::uint64_t seed, std::size_t n) {
  testing::SyntheticCorpusOptions options;
  options.seed = seed;
  options.documents = n;
  options.descriptors = 150;
  return testing::SyntheticCorpus(options);
}

TEST(SnapshotTest, SaveLoadSaveIsByteIdentical) {
  Engine engine;
  for (const RawDocument& d : Corpus(5, 50)) engine.Ingest(d);
  const std::string first = SnapshotText(engine);
  std::istringstream in(first);
  const Engine loaded = LoadSnapshot(in);
  EXPECT_EQ(SnapshotText(loaded), first);
  EXPECT_EQ(loaded.graph(), engine.graph());
  EXPECT_EQ(loaded.densities(), engine.densities());
  EXPECT_EQ(loaded.labeling(), engine.labeling());
}

TEST(SnapshotTest, ResumedStreamMatchesUninterruptedRun) {
  for (Rule rule : {Rule::kA, Rule::kB}) {
    Config config;
    config.rule = rule;
    config.density = DensityMode::kClusteringCoefficient;
    const auto docs = Corpus(8, 60);
    Engine whole(config);
    Engine first(config);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      whole.Ingest(docs[i]);
      if (i < 25) first.Ingest(docs[i]);
    }
    std::stringstream io;
    SaveSnapshot(first, io);
    Engine resumed = LoadSnapshot(io);
    for (std::size_t i = 25; i < docs.size(); ++i) resumed.Ingest(docs[i]);
    EXPECT_EQ(SnapshotText(resumed), SnapshotText(whole));
  }
}

TEST(SnapshotTest, ConfigRoundTrips) {
  Config c;
  c.k = 5;
  c.sim_threshold = 0.25;
  c.rule = Rule::kA;
  c.density = DensityMode::kClusteringCoefficient;
  c.surplombant = SurplombantMode::kDominatesNeighborhood;
  c.ties = TieMode::kTruncate;
  EXPECT_EQ(ConfigFromJson(ConfigToJson(c)), c);
}

TEST(SnapshotTest, EmptyEngineRoundTrips) {
  const Engine empty;
  std::istringstream in(SnapshotText(empty));
  EXPECT_EQ(LoadSnapshot(in).size(), 0u);
}

TEST(SnapshotTest, RejectsMalformedInput) {
  std::istringstream not_json("{");
  EXPECT_THROW(LoadSnapshot(not_json), std::invalid_argument);
  EXPECT_THROW(SnapshotFromJson(nlohmann::json::parse("{\"format\":\"x\"}")),
               std::invalid_argument);

  Engine engine;
  for (const RawDocument& d : Corpus(2, 10)) engine.Ingest(d);
  nlohmann::json j = SnapshotToJson(engine);
  j["nodes"][3]["heads"] = nlohmann::json::array({99});
  EXPECT_THROW(SnapshotFromJson(j), std::invalid_argument);
  j = SnapshotToJson(engine);
  j["nodes"][0]["terms"] = "oops";
  EXPECT_THROW(SnapshotFromJson(j), std::invalid_argument);
}

}  // namespace
}  // namespace germen
