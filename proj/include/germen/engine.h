#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "germen/config.h"
#include "germen/density.h"
#include "germen/knn_graph.h"
#include "germen/labeling.h"
#include "germen/vector_space.h"

namespace germen {

// What one ingestion did to the clustering.
struct IngestReport {
  std::string doc_id;
  NodeId node = 0;
  std::size_t perturbed = 0;        // nodes whose links changed
  std::size_t density_changed = 0;  // nodes whose density changed
  std::size_t passes = 0;           // propagation passes
  std::vector<std::string> relabeled;  // earlier documents with new heads
  std::vector<std::string> created_heads;
  std::vector<std::string> vanished_heads;
};

// Incremental density-peak clustering of a document stream.
//
// Each ingested document becomes a node of the K-nearest-neighbor graph.
// Ingest() updates the links it perturbs, recomputes densities in the
// affected neighborhoods, then propagates head changes down the density
// landscape. The resulting state depends only on the set of documents
// ingested, not on their order, up to exact density ties (broken by age).
//
// Not synchronized: callers sharing an engine across threads must serialize
// Ingest() against every other call.
class Engine {
 public:
  explicit Engine(Config config = {});

  // Throws std::invalid_argument for an empty or duplicate doc id, a repeated
  // or empty descriptor, or a zero count; EmptyDocumentError for a document
  // without descriptors. The engine is unchanged when it throws.
  IngestReport Ingest(const RawDocument& doc);

  // Rebuilds an engine from saved state. Vectors are renormalized from the
  // counts; everything else is taken as is after consistency checks.
  static Engine Restore(Config config, DescriptorRegistry registry,
                        std::vector<DocumentVector> documents,
                        NeighborGraph graph, DensityLandscape densities,
                        Labeling labeling);

  const Config& config() const { return config_; }
  const DescriptorRegistry& registry() const { return registry_; }
  const NeighborGraph& graph() const { return graph_; }
  const DensityLandscape& densities() const { return densities_; }
  const Labeling& labeling() const { return labeling_; }

  std::size_t size() const { return documents_.size(); }
  const DocumentVector& document(NodeId v) const { return documents_.at(v); }
  const NormalizedVector& vector(NodeId v) const { return vectors_.at(v); }
  const std::string& doc_id(NodeId v) const { return documents_.at(v).doc_id(); }
  std::optional<NodeId> FindNode(std::string_view doc_id) const;

  std::vector<NodeCategory> Categories() const { return Categorize(labeling_); }

 private:
  Config config_;
  DescriptorRegistry registry_;
  std::vector<DocumentVector> documents_;
  std::vector<std::string> doc_ids_;  // tie-break keys, by node
  std::vector<NormalizedVector> vectors_;
  std::unordered_map<std::string, NodeId> nodes_by_doc_id_;
  NeighborGraph graph_;
  DensityLandscape densities_;
  Labeling labeling_;
};

}  // namespace germen
