#pragma once

#include <span>
#include <vector>

#include "germen/config.h"
#include "germen/knn_graph.h"

namespace germen {

// Sum of the similarities of every directed link whose two endpoints lie in
// the 1-neighborhood of v. A reciprocal pair counts twice.
double SumDensity(const NeighborGraph& graph, NodeId v);

// SumDensity(v) / (n (n - 1)) with n = |1-neighborhood|; 0 when n < 2.
double ClusteringCoefficientDensity(const NeighborGraph& graph, NodeId v);

double Density(const NeighborGraph& graph, NodeId v, DensityMode mode);

// Per-node densities, kept current as the graph grows.
class DensityLandscape {
 public:
  DensityLandscape() = default;
  explicit DensityLandscape(std::vector<double> values)
      : values_(std::move(values)) {}

  // Registers a freshly inserted node with density 0.
  void AddNode() { values_.push_back(0.0); }

  // Recomputes every member of `perturbed` and of their 1-neighborhoods.
  // Returns, ascending, the nodes whose density actually changed.
  std::vector<NodeId> Update(const NeighborGraph& graph,
                             const std::vector<NodeId>& perturbed,
                             DensityMode mode);

  double at(NodeId v) const { return values_.at(v); }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const DensityLandscape&,
                         const DensityLandscape&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace germen
