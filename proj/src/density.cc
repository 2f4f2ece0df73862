#include "germen/density.h"

#include <algorithm>

#include "germen/vector_space.h"

namespace germen {

double SumDensity(const NeighborGraph& graph, NodeId v) {
  const std::vector<NodeId> members = graph.Neighborhood(v, 1);
  std::vector<double> sims;
  for (NodeId a : members) {
    for (const Link& l : graph.OutLinks(a)) {
      if (std::binary_search(members.begin(), members.end(), l.node)) {
        sims.push_back(l.similarity);
      }
    }
  }
  return CanonicalSum(std::move(sims));
}

double ClusteringCoefficientDensity(const NeighborGraph& graph, NodeId v) {
  const double n = static_cast<double>(graph.Neighborhood(v, 1).size());
  if (n < 2) return 0.0;
  return SumDensity(graph, v) / (n * (n - 1));
}

double Density(const NeighborGraph& graph, NodeId v, DensityMode mode) {
  return mode == DensityMode::kSum ? SumDensity(graph, v)
                                   : ClusteringCoefficientDensity(graph, v);
}

std::vector<NodeId> DensityLandscape::Update(
    const NeighborGraph& graph, const std::vector<NodeId>& perturbed,
    DensityMode mode) {
  std::vector<NodeId> targets;
  for (NodeId v : perturbed) {
    auto around = graph.Neighborhood(v, 1);
    targets.insert(targets.end(), around.begin(), around.end());
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  std::vector<NodeId> changed;
  for (NodeId v : targets) {
    const double d = Density(graph, v, mode);
    if (d != values_.at(v)) {
      values_[v] = d;
      changed.push_back(v);
    }
  }
  return changed;
}

}  // namespace germen
