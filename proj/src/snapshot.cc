#include "germen/snapshot.h"

#include <sstream>
#include <stdexcept>

namespace germen {
namespace {

constexpr const char* kFormat = "germen-snapshot";
constexpr int kVersion = 1;

}  // namespace

nlohmann::json ConfigToJson(const Config& config) {
  return {{"k", config.k},
          {"sim_threshold", config.sim_threshold},
          {"rule", std::string(ToString(config.rule))},
          {"density", std::string(ToString(config.density))},
          {"surplombant", std::string(ToString(config.surplombant))},
          {"ties", std::string(ToString(config.ties))}};
}

Config ConfigFromJson(const nlohmann::json& j) {
  Config config;
  config.k = j.at("k").get<int>();
  config.sim_threshold = j.at("sim_threshold").get<double>();
  config.rule = ParseRule(j.at("rule").get<std::string>());
  config.density = ParseDensityMode(j.at("density").get<std::string>());
  config.surplombant =
      ParseSurplombantMode(j.at("surplombant").get<std::string>());
  config.ties = ParseTieMode(j.value("ties", std::string("include")));
  config.Validate();
  return config;
}

nlohmann::json IngestReportToJson(const IngestReport& report) {
  return {{"doc_id", report.doc_id},
          {"node", report.node},
          {"perturbed", report.perturbed},
          {"density_changed", report.density_changed},
          {"passes", report.passes},
          {"relabeled", report.relabeled},
          {"created_heads", report.created_heads},
          {"vanished_heads", report.vanished_heads}};
}

nlohmann::json SnapshotToJson(const Engine& engine) {
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId v = 0; v < engine.size(); ++v) {
    const DocumentVector& doc = engine.document(v);
    nlohmann::json terms = nlohmann::json::array();
    for (const TermCount& tc : doc.counts()) {
      terms.push_back({tc.descriptor, tc.count});
    }
    nlohmann::json out = nlohmann::json::array();
    for (const Link& l : engine.graph().OutLinks(v)) {
      out.push_back({l.node, l.similarity});
    }
    nodes.push_back({{"doc_id", doc.doc_id()},
                     {"terms", std::move(terms)},
                     {"density", engine.densities().at(v)},
                     {"heads", engine.labeling().heads(v)},
                     {"out", std::move(out)}});
  }
  return {{"format", kFormat},
          {"version", kVersion},
          {"config", ConfigToJson(engine.config())},
          {"descriptors", engine.registry().names()},
          {"nodes", std::move(nodes)}};
}

Engine SnapshotFromJson(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kFormat ||
        j.at("version").get<int>() != kVersion) {
      throw std::invalid_argument("not a version 1 germen snapshot");
    }
    const Config config = ConfigFromJson(j.at("config"));
    DescriptorRegistry registry;
    for (const auto& name : j.at("descriptors")) {
      const std::string s = name.get<std::string>();
      if (registry.Intern(s) != registry.size() - 1) {
        throw std::invalid_argument("descriptor '" + s + "' listed twice");
      }
    }
    std::vector<DocumentVector> documents;
    std::vector<std::vector<Link>> out_links;
    std::vector<double> densities;
    std::vector<HeadList> heads;
    const auto& nodes = j.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& node = nodes[i];
      std::vector<TermCount> counts;
      for (const auto& tc : node.at("terms")) {
        counts.push_back(
            {tc.at(0).get<DescriptorId>(), tc.at(1).get<std::uint32_t>()});
      }
      documents.emplace_back(node.at("doc_id").get<std::string>(),
                             static_cast<NodeId>(i), std::move(counts));
      std::vector<Link> out;
      for (const auto& l : node.at("out")) {
        out.push_back({l.at(0).get<NodeId>(), l.at(1).get<double>()});
      }
      out_links.push_back(std::move(out));
      densities.push_back(node.at("density").get<double>());
      heads.push_back(node.at("heads").get<HeadList>());
    }
    return Engine::Restore(config, std::move(registry), std::move(documents),
                           NeighborGraph::FromOutLinks(std::move(out_links)),
                           DensityLandscape(std::move(densities)),
                           Labeling(std::move(heads)));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed snapshot: ") + e.what());
  }
}

std::string SnapshotText(const Engine& engine) {
  return SnapshotToJson(engine).dump(1) + "\n";
}

void SaveSnapshot(const Engine& engine, std::ostream& out) {
  out << SnapshotText(engine);
}

Engine LoadSnapshot(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("snapshot is not JSON: ") +
                                e.what());
  }
  return SnapshotFromJson(j);
}

}  // namespace germen
