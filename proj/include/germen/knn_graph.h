#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "germen/config.h"

namespace germen {

// Nodes are numbered by arrival: node i is the i-th document ingested.
using NodeId = std::uint32_t;

struct Link {
  NodeId node;
  double similarity;

  friend bool operator==(const Link&, const Link&) = default;
};

// Nodes whose in- or out-link set changed during one insertion, ascending.
using PerturbationSet = std::vector<NodeId>;

// Picks the nearest neighbors among `candidates`: similarity strictly above
// the threshold, the k largest, plus every candidate tied with the k-th
// (TieMode::kInclude). The result is sorted by node id.
std::vector<Link> SelectNearest(std::vector<Link> candidates,
                                const Config& config);

// Directed, valued K-nearest-neighbor graph. Every link carries the
// similarity of its endpoints; in-links mirror out-links exactly. Both lists
// are kept sorted by node id.
class NeighborGraph {
 public:
  NeighborGraph() = default;

  // Rebuilds a graph from its out-link lists. Throws std::invalid_argument on
  // self links, dangling targets or unsorted lists.
  static NeighborGraph FromOutLinks(std::vector<std::vector<Link>> out_links);

  std::size_t size() const { return out_.size(); }
  std::size_t link_count() const { return link_count_; }

  std::span<const Link> OutLinks(NodeId v) const { return out_.at(v); }
  std::span<const Link> InLinks(NodeId v) const { return in_.at(v); }
  bool HasLink(NodeId from, NodeId to) const;

  // Appends node size(), whose similarity to every earlier node i is
  // similarities[i]. The new node links to its own nearest neighbors and
  // every earlier node re-selects its neighbors with the newcomer as a
  // candidate, dropping whoever it displaces. Returns the perturbed nodes.
  PerturbationSet Insert(std::span<const double> similarities,
                         const Config& config);

  // depth 1: v with its in- and out-neighbors. depth 2: union of the depth-1
  // neighborhoods of those. Sorted ascending. Throws std::out_of_range for an
  // unknown node and std::invalid_argument for a depth other than 1 or 2.
  std::vector<NodeId> Neighborhood(NodeId v, int depth) const;

  friend bool operator==(const NeighborGraph&, const NeighborGraph&) = default;

 private:
  std::vector<std::vector<Link>> out_;
  std::vector<std::vector<Link>> in_;
  std::size_t link_count_ = 0;
};

}  // namespace germen
