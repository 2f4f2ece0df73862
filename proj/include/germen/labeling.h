#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "germen/config.h"
#include "germen/density.h"
#include "germen/knn_graph.h"

namespace germen {

// Class heads of one node, ascending and duplicate-free.
using HeadList = std::vector<NodeId>;

enum class NodeCategory {
  kNoyauMember,  // exclusive member of a multi-node class, head included
  kNodule,       // lone head that anchors multivalent nodes
  kIsole,        // lone head with nothing attached
  kMultivalent,  // two or more heads
};

std::string_view ToString(NodeCategory category);

// The per-node head lists. A head is a node whose list is exactly itself.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<HeadList> lists) : lists_(std::move(lists)) {}

  // A new node starts as its own head.
  void AddNode(NodeId v) { lists_.push_back({v}); }

  const HeadList& heads(NodeId v) const { return lists_.at(v); }
  void set_heads(NodeId v, HeadList heads) { lists_.at(v) = std::move(heads); }
  bool IsHead(NodeId v) const {
    const HeadList& h = lists_.at(v);
    return h.size() == 1 && h[0] == v;
  }
  std::vector<NodeId> Heads() const;

  std::size_t size() const { return lists_.size(); }
  std::span<const HeadList> lists() const { return lists_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<HeadList> lists_;
};

// Orders nodes of equal density. With keys (one distinct key per node, e.g.
// the doc ids) the smaller key comes first, which keeps every tie decision
// independent of arrival order; without keys the older node comes first.
class TieBreak {
 public:
  TieBreak() = default;
  explicit TieBreak(std::span<const std::string> keys) : keys_(keys) {}

  bool operator()(NodeId a, NodeId b) const {
    return keys_.empty() ? a < b : keys_[a] < keys_[b];
  }

 private:
  std::span<const std::string> keys_;
};

// Strict total order driving propagation: denser first, then by `ties`.
inline bool Precedes(const DensityLandscape& densities, NodeId a, NodeId b,
                     const TieBreak& ties = {}) {
  const double da = densities.at(a);
  const double db = densities.at(b);
  if (da != db) return da > db;
  return ties(a, b);
}

struct Overhang {
  NodeId node;
  double density;

  friend bool operator==(const Overhang&, const Overhang&) = default;
};

// In-neighbors of v that overhang it: strictly denser than v and, under
// kDominatesNeighborhood, at least as dense as every node of v's
// 1-neighborhood. Sorted in Precedes order.
std::vector<Overhang> Surplombants(const NeighborGraph& graph,
                                   const DensityLandscape& densities, NodeId v,
                                   SurplombantMode mode,
                                   const TieBreak& ties = {});

// Head list v should carry given the current lists of the nodes above it.
//
// Rule A copies the list of the first overhanging in-neighbor, Rule B unions
// the lists of all of them. Without an overhanging in-neighbor, v copies the
// list of the first in-neighbor of exactly equal density that precedes it (a
// plateau shares one number); failing that, v heads a class of its own.
HeadList ApplyRule(const NeighborGraph& graph,
                   const DensityLandscape& densities, const Labeling& labeling,
                   NodeId v, const Config& config, const TieBreak& ties = {});

class PropagationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PropagationResult {
  std::vector<NodeId> changed;  // ascending
  // Head list each changed node carried before the call, in change order.
  std::vector<std::pair<NodeId, HeadList>> previous;
  std::size_t passes = 0;
  std::size_t evaluations = 0;
};

// Worklist loop: each pass visits its nodes in Precedes order, re-applies the
// rule, and queues the lower out-neighbors of every node whose list changed.
// Stops when a pass changes nothing. Throws PropagationError if the number of
// rule evaluations exceeds n^2.
PropagationResult Propagate(const NeighborGraph& graph,
                            const DensityLandscape& densities,
                            std::vector<NodeId> seeds, const Config& config,
                            Labeling& labeling, const TieBreak& ties = {});

std::vector<NodeCategory> Categorize(const Labeling& labeling);

}  // namespace germen
