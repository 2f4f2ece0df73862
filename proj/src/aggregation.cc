#include "germen/aggregation.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <deque>
#include <set>

namespace germen {

NoyauGraph BuildNoyauGraph(const Labeling& labeling, int valence,
                           ValenceMode mode) {
  if (valence < 2) throw std::invalid_argument("valence must be at least 2");
  NoyauGraph graph;
  graph.valence = valence;
  graph.mode = mode;
  graph.vertices = labeling.Heads();

  std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>> support;
  const auto wanted = static_cast<std::size_t>(valence);
  for (NodeId v = 0; v < labeling.size(); ++v) {
    const HeadList& heads = labeling.heads(v);
    const bool selected = mode == ValenceMode::kExact ? heads.size() == wanted
                                                      : heads.size() >= wanted;
    if (!selected) continue;
    for (std::size_t i = 0; i < heads.size(); ++i) {
      for (std::size_t j = i + 1; j < heads.size(); ++j) {
        support[{heads[i], heads[j]}].push_back(v);
      }
    }
  }
  for (auto& [pair, docs] : support) {
    graph.edges.push_back({pair.first, pair.second, std::move(docs)});
  }
  return graph;
}

std::vector<NoyauComponent> ConnectedComponents(const NoyauGraph& graph,
                                                const Labeling& labeling) {
  std::map<NodeId, std::vector<std::size_t>> incident;
  for (NodeId v : graph.vertices) incident[v];
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    incident[graph.edges[e].a].push_back(e);
    incident[graph.edges[e].b].push_back(e);
  }

  std::map<NodeId, std::vector<NodeId>> exclusive;
  for (NodeId v = 0; v < labeling.size(); ++v) {
    const HeadList& heads = labeling.heads(v);
    if (heads.size() == 1 && incident.contains(heads[0])) {
      exclusive[heads[0]].push_back(v);
    }
  }

  std::vector<NoyauComponent> components;
  std::set<NodeId> visited;
  for (const auto& [start, unused] : incident) {
    if (visited.contains(start)) continue;
    NoyauComponent c;
    std::deque<NodeId> frontier{start};
    visited.insert(start);
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop_front();
      c.noyaux.push_back(v);
      const auto& members = exclusive[v];
      c.documents.insert(c.documents.end(), members.begin(), members.end());
      for (std::size_t e : incident[v]) {
        const NoyauEdge& edge = graph.edges[e];
        c.documents.insert(c.documents.end(), edge.documents.begin(),
                           edge.documents.end());
        const NodeId other = edge.a == v ? edge.b : edge.a;
        if (visited.insert(other).second) frontier.push_back(other);
      }
    }
    std::sort(c.noyaux.begin(), c.noyaux.end());
    std::sort(c.documents.begin(), c.documents.end());
    c.documents.erase(std::unique(c.documents.begin(), c.documents.end()),
                      c.documents.end());
    components.push_back(std::move(c));
  }
  std::sort(components.begin(), components.end(),
            [](const NoyauComponent& x, const NoyauComponent& y) {
              if (x.document_count() != y.document_count()) {
                return x.document_count() > y.document_count();
              }
              return x.noyaux.front() < y.noyaux.front();
            });
  for (std::size_t i = 0; i < components.size(); ++i) components[i].id = i + 1;
  return components;
}

std::map<std::size_t, std::size_t> SizeDistribution(const Labeling& labeling) {
  std::map<NodeId, std::size_t> sizes;
  for (NodeId v = 0; v < labeling.size(); ++v) {
    const HeadList& heads = labeling.heads(v);
    if (heads.size() == 1) ++sizes[heads[0]];
  }
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& [head, size] : sizes) ++histogram[size];
  return histogram;
}

std::string_view ToString(ComponentStatus status) {
  switch (status) {
    case ComponentStatus::kPending:
      return "pending";
    case ComponentStatus::kValidated:
      return "validated";
    case ComponentStatus::kInvalidated:
      return "invalidated";
  }
  return "unknown";
}

ComponentStatus ParseComponentStatus(std::string_view s) {
  if (s == "pending") return ComponentStatus::kPending;
  if (s == "validated") return ComponentStatus::kValidated;
  if (s == "invalidated") return ComponentStatus::kInvalidated;
  throw CurationError("unknown status '" + std::string(s) + "'");
}

CurationSession::CurationSession(std::vector<NoyauComponent> components) {
  for (NoyauComponent& c : components) {
    for (NodeId h : c.noyaux) {
      if (!component_of_.emplace(h, c.id).second) {
        throw CurationError("noyau " + std::to_string(h) +
                            " appears in two components");
      }
    }
    components_.push_back({std::move(c), ComponentStatus::kPending, "", {}});
  }
}

const CuratedComponent& CurationSession::component(std::size_t id) const {
  for (const CuratedComponent& c : components_) {
    if (c.component.id == id) return c;
  }
  throw CurationError("unknown component " + std::to_string(id));
}

CuratedComponent& CurationSession::Mutable(std::size_t id) {
  return const_cast<CuratedComponent&>(component(id));
}

std::size_t CurationSession::ComponentOf(NodeId noyau) const {
  auto it = component_of_.find(noyau);
  if (it == component_of_.end()) {
    throw CurationError("node " + std::to_string(noyau) + " is not a noyau");
  }
  return it->second;
}

void CurationSession::Merge(std::vector<NodeId> noyaux, std::string label) {
  label = std::string(TrimWhitespace(label));
  if (label.empty()) throw CurationError("a merge needs a nonempty label");
  if (noyaux.empty()) throw CurationError("a merge needs at least one noyau");
  const std::size_t id = ComponentOf(noyaux.front());
  for (NodeId h : noyaux) {
    if (ComponentOf(h) != id) {
      throw CurationError("cannot merge noyaux from different components");
    }
  }
  CuratedComponent& target = Mutable(id);
  if (target.status == ComponentStatus::kInvalidated) {
    throw CurationError("component " + std::to_string(id) +
                        " is invalidated");
  }

  std::set<NodeId> merged(noyaux.begin(), noyaux.end());
  std::vector<ManualGroup> kept;
  std::optional<std::size_t> slot;
  for (ManualGroup& g : target.groups) {
    const bool overlaps = std::any_of(
        g.noyaux.begin(), g.noyaux.end(),
        [&merged](NodeId h) { return merged.contains(h); });
    if (overlaps) {
      merged.insert(g.noyaux.begin(), g.noyaux.end());
      if (!slot) slot = kept.size();
    } else {
      kept.push_back(std::move(g));
    }
  }
  ManualGroup group{{merged.begin(), merged.end()}, std::move(label)};
  kept.insert(kept.begin() + static_cast<std::ptrdiff_t>(slot.value_or(kept.size())),
              std::move(group));
  target.groups = std::move(kept);
}

void CurationSession::SetStatus(std::size_t id, ComponentStatus status,
                                std::optional<std::string> label) {
  CuratedComponent& target = Mutable(id);
  if (label) {
    std::string trimmed(TrimWhitespace(*label));
    if (trimmed.empty()) throw CurationError("component label is empty");
    target.label = std::move(trimmed);
  }
  target.status = status;
}

Classification ExportClassification(const CurationSession& session,
                                    const Engine& engine,
                                    const ExportOptions& options) {
  const Labeling& labeling = engine.labeling();
  const std::vector<NodeCategory> categories = labeling.size() > 0
                                                   ? engine.Categories()
                                                   : std::vector<NodeCategory>{};

  const auto documents_of = [&](const std::vector<NodeId>& noyaux) {
    std::vector<std::string> ids;
    for (NodeId v = 0; v < labeling.size(); ++v) {
      const HeadList& heads = labeling.heads(v);
      if (options.exclude_isolated && categories[v] == NodeCategory::kIsole) {
        continue;
      }
      if (options.max_heads > 0 && heads.size() > options.max_heads) continue;
      if (heads.size() > 1 && !options.include_multivalent) continue;
      const bool inside = std::all_of(
          heads.begin(), heads.end(), [&noyaux](NodeId h) {
            return std::binary_search(noyaux.begin(), noyaux.end(), h);
          });
      if (inside) ids.push_back(engine.doc_id(v));
    }
    return ids;
  };

  Classification result;
  for (const CuratedComponent& c : session.components()) {
    if (c.status == ComponentStatus::kInvalidated) continue;
    if (options.validated_only && c.status != ComponentStatus::kValidated) {
      continue;
    }
    std::set<NodeId> rest(c.component.noyaux.begin(), c.component.noyaux.end());
    for (const ManualGroup& g : c.groups) {
      for (NodeId h : g.noyaux) rest.erase(h);
      auto ids = documents_of(g.noyaux);
      if (!ids.empty()) result.push_back({g.label, std::move(ids)});
    }
    if (rest.empty()) continue;
    auto ids = documents_of({rest.begin(), rest.end()});
    if (ids.empty()) continue;
    if (c.label.empty()) {
      if (c.status == ComponentStatus::kValidated) {
        throw CurationError("validated component " +
                            std::to_string(c.component.id) +
                            " has unlabeled noyaux");
      }
      continue;
    }
    result.push_back({c.label, std::move(ids)});
  }
  return result;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CurationJournal::CurationJournal(std::ostream* out, Clock clock)
    : out_(out), clock_(clock ? std::move(clock) : Clock(UtcTimestamp)) {}

void CurationJournal::Append(nlohmann::json entry) {
  entry["ts"] = clock_();
  *out_ << entry.dump() << "\n";
  out_->flush();
}

void CurationJournal::RecordMerge(const std::vector<std::string>& noyaux,
                                  const std::string& label) {
  Append({{"action", "merge"}, {"noyaux", noyaux}, {"label", label}});
}

void CurationJournal::RecordStatus(std::size_t component,
                                   ComponentStatus status,
                                   const std::optional<std::string>& label) {
  nlohmann::json entry = {{"action", "status"},
                          {"component", component},
                          {"status", std::string(ToString(status))}};
  if (label) entry["label"] = *label;
  Append(std::move(entry));
}

void ReplayJournal(std::istream& in, const Engine& engine,
                   CurationSession& session) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (TrimWhitespace(line).empty()) continue;
    const std::string where = "journal line " + std::to_string(line_number);
    nlohmann::json entry;
    try {
      entry = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
    try {
      const std::string action = entry.at("action").get<std::string>();
      if (action == "merge") {
        std::vector<NodeId> noyaux;
        for (const auto& id : entry.at("noyaux")) {
          auto node = engine.FindNode(id.get<std::string>());
          if (!node) {
            throw CurationError("unknown document '" + id.get<std::string>() +
                                "'");
          }
          noyaux.push_back(*node);
        }
        session.Merge(std::move(noyaux), entry.at("label").get<std::string>());
      } else if (action == "status") {
        std::optional<std::string> label;
        if (entry.contains("label")) label = entry["label"].get<std::string>();
        session.SetStatus(
            entry.at("component").get<std::size_t>(),
            ParseComponentStatus(entry.at("status").get<std::string>()),
            label);
      } else {
        throw std::invalid_argument("unknown action '" + action + "'");
      }
    } catch (const CurationError& e) {
      throw CurationError(where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
}

}  // namespace germen
