#include "germen/engine.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace germen {

Engine::Engine(Config config) : config_(config) { config_.Validate(); }

std::optional<NodeId> Engine::FindNode(std::string_view doc_id) const {
  auto it = nodes_by_doc_id_.find(std::string(doc_id));
  if (it == nodes_by_doc_id_.end()) return std::nullopt;
  return it->second;
}

IngestReport Engine::Ingest(const RawDocument& raw) {
  if (raw.doc_id.empty()) throw std::invalid_argument("empty document id");
  if (nodes_by_doc_id_.contains(raw.doc_id)) {
    throw std::invalid_argument("duplicate document id '" + raw.doc_id + "'");
  }
  if (raw.terms.empty()) throw EmptyDocumentError(raw.doc_id);
  std::set<std::string_view> seen;
  for (const auto& [term, count] : raw.terms) {
    const std::string_view name = TrimWhitespace(term);
    if (name.empty()) {
      throw std::invalid_argument("empty descriptor in document '" +
                                  raw.doc_id + "'");
    }
    if (count == 0) {
      throw std::invalid_argument("zero count for '" + std::string(name) +
                                  "' in document '" + raw.doc_id + "'");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("descriptor '" + std::string(name) +
                                  "' repeated in document '" + raw.doc_id +
                                  "'");
    }
  }

  const auto node = static_cast<NodeId>(documents_.size());
  std::vector<TermCount> counts;
  counts.reserve(raw.terms.size());
  for (const auto& [term, count] : raw.terms) {
    counts.push_back({registry_.Intern(term), count});
  }
  DocumentVector doc(raw.doc_id, node, std::move(counts));
  NormalizedVector vec = Normalize(doc);

  std::vector<double> similarities;
  similarities.reserve(node);
  for (const NormalizedVector& other : vectors_) {
    similarities.push_back(Similarity(vec, other));
  }

  nodes_by_doc_id_.emplace(doc.doc_id(), node);
  doc_ids_.push_back(doc.doc_id());
  documents_.push_back(std::move(doc));
  vectors_.push_back(std::move(vec));

  const PerturbationSet perturbed = graph_.Insert(similarities, config_);
  densities_.AddNode();
  const std::vector<NodeId> density_changed =
      densities_.Update(graph_, perturbed, config_.density);

  // Anything whose inputs to the head rule may have moved: the newcomer,
  // nodes whose links changed, and every node within one hop of a density
  // change (its overhanging neighbors may now be different).
  labeling_.AddNode(node);
  std::vector<NodeId> seeds{node};
  seeds.insert(seeds.end(), perturbed.begin(), perturbed.end());
  for (NodeId v : density_changed) {
    auto around = graph_.Neighborhood(v, 1);
    seeds.insert(seeds.end(), around.begin(), around.end());
  }
  const PropagationResult propagation =
      Propagate(graph_, densities_, std::move(seeds), config_, labeling_,
                TieBreak(doc_ids_));

  IngestReport report;
  report.doc_id = raw.doc_id;
  report.node = node;
  report.perturbed = perturbed.size();
  report.density_changed = density_changed.size();
  report.passes = propagation.passes;

  std::vector<NodeId> relabeled, created, vanished;
  for (const auto& [v, before] : propagation.previous) {
    if (v == node || before == labeling_.heads(v)) continue;
    relabeled.push_back(v);
    const bool was_head = before.size() == 1 && before[0] == v;
    const bool is_head = labeling_.IsHead(v);
    if (was_head && !is_head) vanished.push_back(v);
    if (!was_head && is_head) created.push_back(v);
  }
  if (labeling_.IsHead(node)) created.push_back(node);
  for (auto* list : {&relabeled, &created, &vanished}) {
    std::sort(list->begin(), list->end());
  }
  for (NodeId v : relabeled) report.relabeled.push_back(doc_id(v));
  for (NodeId v : created) report.created_heads.push_back(doc_id(v));
  for (NodeId v : vanished) report.vanished_heads.push_back(doc_id(v));
  return report;
}

Engine Engine::Restore(Config config, DescriptorRegistry registry,
                       std::vector<DocumentVector> documents,
                       NeighborGraph graph, DensityLandscape densities,
                       Labeling labeling) {
  const std::size_t n = documents.size();
  if (graph.size() != n || densities.size() != n || labeling.size() != n) {
    throw std::invalid_argument(
        "inconsistent state: documents, graph, densities and labels differ "
        "in size");
  }
  Engine engine(config);
  engine.registry_ = std::move(registry);
  for (NodeId v = 0; v < n; ++v) {
    const DocumentVector& doc = documents[v];
    if (doc.arrival_index() != v) {
      throw std::invalid_argument("document '" + doc.doc_id() +
                                  "' is out of arrival order");
    }
    for (const TermCount& tc : doc.counts()) {
      if (tc.descriptor >= engine.registry_.size()) {
        throw std::invalid_argument("document '" + doc.doc_id() +
                                    "' uses an unregistered descriptor");
      }
    }
    for (NodeId h : labeling.heads(v)) {
      if (h >= n) {
        throw std::invalid_argument("document '" + doc.doc_id() +
                                    "' names an unknown head");
      }
    }
    if (labeling.heads(v).empty()) {
      throw std::invalid_argument("document '" + doc.doc_id() +
                                  "' has no head");
    }
    if (!engine.nodes_by_doc_id_.emplace(doc.doc_id(), v).second) {
      throw std::invalid_argument("duplicate document id '" + doc.doc_id() +
                                  "'");
    }
    engine.vectors_.push_back(Normalize(doc));
    engine.doc_ids_.push_back(doc.doc_id());
  }
  engine.documents_ = std::move(documents);
  engine.graph_ = std::move(graph);
  engine.densities_ = std::move(densities);
  engine.labeling_ = std::move(labeling);
  return engine;
}

}  // namespace germen
