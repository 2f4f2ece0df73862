// germen: incremental density-peak clustering of document streams.
//
//   germen ingest CORPUS -o SNAPSHOT [--resume SNAPSHOT] [--log FILE]
//   germen report SNAPSHOT (--class DOC_ID | --all)
//   germen sizes SNAPSHOT
//   germen components SNAPSHOT [--valence V] [--at-least] [--min-docs N]
//   germen export SNAPSHOT --journal FILE [--valence V] [--validated-only]
//   germen eval REFERENCE PREDICTED
//   germen permtest CORPUS [--n N] [--seed S]
//   germen serve SNAPSHOT [--port P] [--valence V] [--journal FILE]
//
// Results go to stdout, diagnostics to stderr.

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "germen/aggregation.h"
#include "germen/corpus_io.h"
#include "germen/evaluation.h"
#include "germen/permtest.h"
#include "germen/saliency.h"
#include "germen/service.h"
#include "germen/snapshot.h"
#include "httplib.h"

namespace germen {
namespace {

struct EngineFlags {
  int k = 3;
  double threshold = 0.1;
  std::string rule = "B";
  std::string density = "sum";
  std::string surplombant = "strict";

  void Register(CLI::App* app) {
    app->add_option("--k", k, "Nearest neighbors per document")
        ->capture_default_str();
    app->add_option("--threshold", threshold,
                    "Links need a similarity strictly above this")
        ->capture_default_str();
    app->add_option("--rule", rule, "Head rule: A (first) or B (union)")
        ->capture_default_str();
    app->add_option("--density", density, "sum or coefficient")
        ->capture_default_str();
    app->add_option("--surplombant", surplombant, "strict or dominates")
        ->capture_default_str();
  }

  Config ToConfig() const {
    Config c;
    c.k = k;
    c.sim_threshold = threshold;
    c.rule = ParseRule(rule);
    c.density = ParseDensityMode(density);
    c.surplombant = ParseSurplombantMode(surplombant);
    c.Validate();
    return c;
  }
};

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

std::ofstream OpenOut(const std::string& path, bool append = false) {
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

Engine Load(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return LoadSnapshot(in);
}

int Ingest(const std::string& corpus_path, const std::string& output,
           const std::string& resume, const std::string& log_path,
           const EngineFlags& flags) {
  std::ifstream in = OpenIn(corpus_path);
  const std::vector<RawDocument> corpus = ReadCorpus(in);
  Engine engine = resume.empty() ? Engine(flags.ToConfig()) : Load(resume);
  std::optional<std::ofstream> log;
  if (!log_path.empty()) log.emplace(OpenOut(log_path, !resume.empty()));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    try {
      const IngestReport report = engine.Ingest(corpus[i]);
      if (log) *log << IngestReportToJson(report).dump() << "\n";
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("document " + std::to_string(i + 1) + " ('" +
                               corpus[i].doc_id + "'): " + e.what());
    }
  }
  std::ofstream out = OpenOut(output);
  SaveSnapshot(engine, out);
  if (!out.flush()) throw std::runtime_error("cannot write '" + output + "'");
  std::cout << "{\"documents\":" << engine.size()
            << ",\"heads\":" << engine.labeling().Heads().size() << "}\n";
  return 0;
}

int Report(const std::string& snapshot, const std::string& class_id,
           bool all) {
  const Engine engine = Load(snapshot);
  if (!all) {
    const auto node = engine.FindNode(class_id);
    if (!node || !engine.labeling().IsHead(*node)) {
      throw std::runtime_error("'" + class_id + "' is not a class head");
    }
    std::cout << RenderClassReport(ProfileClass(engine, *node), engine);
    return 0;
  }
  std::vector<ClassProfile> profiles;
  for (NodeId h : engine.labeling().Heads()) {
    profiles.push_back(ProfileClass(engine, h));
  }
  std::sort(profiles.begin(), profiles.end(),
            [&engine](const ClassProfile& a, const ClassProfile& b) {
              if (a.members.size() != b.members.size()) {
                return a.members.size() > b.members.size();
              }
              return engine.doc_id(a.head) < engine.doc_id(b.head);
            });
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (i > 0) std::cout << "\n";
    std::cout << RenderClassReport(profiles[i], engine);
  }
  return 0;
}

int Sizes(const std::string& snapshot) {
  const Engine engine = Load(snapshot);
  std::cout << "size,count\n";
  for (const auto& [size, count] : SizeDistribution(engine.labeling())) {
    std::cout << size << "," << count << "\n";
  }
  return 0;
}

int Components(const std::string& snapshot, int valence, bool at_least,
               std::size_t min_docs) {
  ClassotronService service(Load(snapshot), valence,
                            at_least ? ValenceMode::kAtLeast
                                     : ValenceMode::kExact,
                            nullptr);
  const ServiceResponse r = service.ListComponents(std::nullopt, min_docs);
  if (r.status != 200) throw std::runtime_error(r.body["error"]);
  std::cout << r.body.dump(2) << "\n";
  return 0;
}

int Export(const std::string& snapshot, const std::string& journal_path,
           int valence, bool at_least, bool validated_only) {
  std::ifstream journal = OpenIn(journal_path);
  const ClassotronService service(
      Load(snapshot), valence,
      at_least ? ValenceMode::kAtLeast : ValenceMode::kExact, nullptr,
      &journal);
  const ServiceResponse r = service.Export(validated_only);
  if (r.status != 200) throw std::runtime_error(r.body["error"]);
  std::cout << r.body.dump(2) << "\n";
  return 0;
}

int Eval(const std::string& reference, const std::string& predicted) {
  std::ifstream ref = OpenIn(reference);
  std::ifstream pred = OpenIn(predicted);
  WriteCurveCsv(std::cout,
                Evaluate(ReadClassification(ref), ReadClassification(pred)));
  return 0;
}

int Permtest(const std::string& corpus_path, std::size_t n,
             std::uint64_t seed, const EngineFlags& flags) {
  std::ifstream in = OpenIn(corpus_path);
  const PermutationCheck check =
      CheckOrderInvariance(ReadCorpus(in), flags.ToConfig(), n, seed);
  if (check.passed) {
    std::cout << "PASS " << check.permutations_run << " permutations\n";
    return 0;
  }
  std::cout << "FAIL " << check.divergence << "\n";
  return 1;
}

httplib::Server* running_server = nullptr;

void StopServer(int) {
  if (running_server != nullptr) running_server->stop();
}

int Serve(const std::string& snapshot, const std::string& host, int port,
          int valence, bool at_least, const std::string& journal_path) {
  Engine engine = Load(snapshot);
  std::ifstream history;
  std::optional<std::ofstream> journal;
  if (!journal_path.empty()) {
    history.open(journal_path);
    journal.emplace(OpenOut(journal_path, true));
  }
  ClassotronService service(
      std::move(engine), valence,
      at_least ? ValenceMode::kAtLeast : ValenceMode::kExact,
      journal ? &*journal : nullptr, history.is_open() ? &history : nullptr);
  httplib::Server server;
  service.Bind(server);
  running_server = &server;
  std::signal(SIGINT, StopServer);
  std::signal(SIGTERM, StopServer);
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    throw std::runtime_error("cannot listen on " + host + ":" +
                             std::to_string(port));
  }
  return 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"Incremental density-peak clustering of document streams"};
  app.require_subcommand(1);

  EngineFlags flags;
  std::string corpus, snapshot, output, resume, log, class_id, journal;
  std::string reference, predicted, host = "127.0.0.1";
  int valence = 2, port = 8080;
  bool all = false, at_least = false, validated_only = false;
  std::size_t min_docs = 0, permutations = 30;
  std::uint64_t seed = 1;

  CLI::App* ingest = app.add_subcommand("ingest", "Cluster a corpus file");
  ingest->add_option("corpus", corpus, "One document per line")->required();
  ingest->add_option("-o,--output", output, "Snapshot to write")->required();
  ingest->add_option("--resume", resume, "Continue from this snapshot");
  ingest->add_option("--log", log, "Write one JSON line per document");
  flags.Register(ingest);

  CLI::App* report = app.add_subcommand("report", "Print class reports");
  report->add_option("snapshot", snapshot)->required();
  auto* one = report->add_option("--class", class_id, "Head doc id");
  auto* every = report->add_flag("--all", all, "Every class, largest first");
  one->excludes(every);

  CLI::App* sizes = app.add_subcommand("sizes", "Noyau size distribution");
  sizes->add_option("snapshot", snapshot)->required();

  CLI::App* components =
      app.add_subcommand("components", "List noyau components");
  components->add_option("snapshot", snapshot)->required();
  components->add_option("--valence", valence)->capture_default_str();
  components->add_flag("--at-least", at_least,
                       "Link through documents with valence or more heads");
  components->add_option("--min-docs", min_docs)->capture_default_str();

  CLI::App* exporter =
      app.add_subcommand("export", "Curated classification from a journal");
  exporter->add_option("snapshot", snapshot)->required();
  exporter->add_option("--journal", journal)->required();
  exporter->add_option("--valence", valence)->capture_default_str();
  exporter->add_flag("--at-least", at_least);
  exporter->add_flag("--validated-only", validated_only);

  CLI::App* eval = app.add_subcommand("eval", "Recall/precision curve as CSV");
  eval->add_option("reference", reference)->required();
  eval->add_option("predicted", predicted)->required();

  CLI::App* permtest =
      app.add_subcommand("permtest", "Check invariance to input order");
  permtest->add_option("corpus", corpus)->required();
  permtest->add_option("--n", permutations)->capture_default_str();
  permtest->add_option("--seed", seed)->capture_default_str();
  flags.Register(permtest);

  CLI::App* serve = app.add_subcommand("serve", "HTTP/JSON curation service");
  serve->add_option("snapshot", snapshot)->required();
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();
  serve->add_option("--valence", valence)->capture_default_str();
  serve->add_flag("--at-least", at_least);
  serve->add_option("--journal", journal, "Replayed, then appended to");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*ingest) return Ingest(corpus, output, resume, log, flags);
  if (*report) {
    if (!all && class_id.empty()) {
      throw std::runtime_error("report needs --class DOC_ID or --all");
    }
    return Report(snapshot, class_id, all);
  }
  if (*sizes) return Sizes(snapshot);
  if (*components) return Components(snapshot, valence, at_least, min_docs);
  if (*exporter) {
    return Export(snapshot, journal, valence, at_least, validated_only);
  }
  if (*eval) return Eval(reference, predicted);
  if (*permtest) return Permtest(corpus, permutations, seed, flags);
  return Serve(snapshot, host, port, valence, at_least, journal);
}

}  // namespace
}  // namespace germen

int main(int argc, char** argv) {
  try {
    return germen::Run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "germen: " << e.what() << "\n";
    return 1;
  }
}
