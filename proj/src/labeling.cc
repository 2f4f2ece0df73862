#include "germen/labeling.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

namespace germen {

std::string_view ToString(NodeCategory category) {
  switch (category) {
    case NodeCategory::kNoyauMember:
      return "noyau";
    case NodeCategory::kNodule:
      return "nodule";
    case NodeCategory::kIsole:
      return "isole";
    case NodeCategory::kMultivalent:
      return "multivalent";
  }
  return "unknown";
}

std::vector<NodeId> Labeling::Heads() const {
  std::vector<NodeId> heads;
  for (NodeId v = 0; v < lists_.size(); ++v) {
    if (IsHead(v)) heads.push_back(v);
  }
  return heads;
}

std::vector<Overhang> Surplombants(const NeighborGraph& graph,
                                   const DensityLandscape& densities, NodeId v,
                                   SurplombantMode mode,
                                   const TieBreak& ties) {
  const double own = densities.at(v);
  double ceiling = -std::numeric_limits<double>::infinity();
  if (mode == SurplombantMode::kDominatesNeighborhood) {
    for (NodeId w : graph.Neighborhood(v, 1)) {
      ceiling = std::max(ceiling, densities.at(w));
    }
  }
  std::vector<Overhang> result;
  for (const Link& l : graph.InLinks(v)) {
    const double d = densities.at(l.node);
    if (d > own && d >= ceiling) result.push_back({l.node, d});
  }
  std::sort(result.begin(), result.end(),
            [&ties](const Overhang& a, const Overhang& b) {
              if (a.density != b.density) return a.density > b.density;
              return ties(a.node, b.node);
            });
  return result;
}

HeadList ApplyRule(const NeighborGraph& graph,
                   const DensityLandscape& densities, const Labeling& labeling,
                   NodeId v, const Config& config, const TieBreak& ties) {
  const std::vector<Overhang> above =
      Surplombants(graph, densities, v, config.surplombant, ties);
  if (!above.empty()) {
    if (config.rule == Rule::kA) return labeling.heads(above.front().node);
    HeadList merged;
    for (const Overhang& o : above) {
      const HeadList& h = labeling.heads(o.node);
      merged.insert(merged.end(), h.begin(), h.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
  }
  const double own = densities.at(v);
  std::optional<NodeId> first;
  for (const Link& l : graph.InLinks(v)) {
    if (densities.at(l.node) != own || !ties(l.node, v)) continue;
    if (!first || ties(l.node, *first)) first = l.node;
  }
  if (first) return labeling.heads(*first);
  return {v};
}

PropagationResult Propagate(const NeighborGraph& graph,
                            const DensityLandscape& densities,
                            std::vector<NodeId> seeds, const Config& config,
                            Labeling& labeling, const TieBreak& ties) {
  PropagationResult result;
  const std::size_t n = graph.size();
  const std::size_t limit = std::max<std::size_t>(n * n, 1);
  const auto order = [&densities, &ties](NodeId a, NodeId b) {
    return Precedes(densities, a, b, ties);
  };

  std::vector<NodeId> pending = std::move(seeds);
  while (!pending.empty()) {
    std::sort(pending.begin(), pending.end(), order);
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    ++result.passes;
    std::vector<NodeId> next;
    for (NodeId v : pending) {
      if (++result.evaluations > limit) {
        throw PropagationError("head propagation did not settle after " +
                               std::to_string(limit) + " evaluations");
      }
      HeadList heads = ApplyRule(graph, densities, labeling, v, config, ties);
      if (heads == labeling.heads(v)) continue;
      if (std::find(result.changed.begin(), result.changed.end(), v) ==
          result.changed.end()) {
        result.changed.push_back(v);
        result.previous.emplace_back(v, labeling.heads(v));
      }
      labeling.set_heads(v, std::move(heads));
      for (const Link& l : graph.OutLinks(v)) {
        if (Precedes(densities, v, l.node, ties)) next.push_back(l.node);
      }
    }
    pending = std::move(next);
  }
  std::sort(result.changed.begin(), result.changed.end());
  return result;
}

std::vector<NodeCategory> Categorize(const Labeling& labeling) {
  const std::size_t n = labeling.size();
  std::vector<std::size_t> exclusive(n, 0);
  std::vector<bool> anchors_multivalent(n, false);
  for (NodeId v = 0; v < n; ++v) {
    const HeadList& h = labeling.heads(v);
    if (h.size() >= 2) {
      for (NodeId head : h) anchors_multivalent[head] = true;
    } else if (h.size() == 1 && h[0] != v) {
      ++exclusive[h[0]];
    }
  }
  std::vector<NodeCategory> categories(n);
  for (NodeId v = 0; v < n; ++v) {
    const HeadList& h = labeling.heads(v);
    if (h.size() >= 2) {
      categories[v] = NodeCategory::kMultivalent;
    } else if (h[0] != v || exclusive[v] > 0) {
      categories[v] = NodeCategory::kNoyauMember;
    } else if (anchors_multivalent[v]) {
      categories[v] = NodeCategory::kNodule;
    } else {
      categories[v] = NodeCategory::kIsole;
    }
  }
  return categories;
}

}  // namespace germen
