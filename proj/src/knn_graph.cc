#include "germen/knn_graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace germen {
namespace {

bool ByNode(const Link& a, const Link& b) { return a.node < b.node; }

void EraseNode(std::vector<Link>& links, NodeId node) {
  auto it = std::lower_bound(links.begin(), links.end(), Link{node, 0.0}, ByNode);
  if (it != links.end() && it->node == node) links.erase(it);
}

void InsertSorted(std::vector<Link>& links, Link link) {
  auto it = std::lower_bound(links.begin(), links.end(), link, ByNode);
  links.insert(it, link);
}

}  // namespace

std::vector<Link> SelectNearest(std::vector<Link> candidates,
                                const Config& config) {
  std::erase_if(candidates, [&](const Link& l) {
    return !(l.similarity > config.sim_threshold);
  });
  const auto k = static_cast<std::size_t>(config.k);
  if (candidates.size() > k) {
    // Descending similarity; among equal similarities the oldest node first.
    std::sort(candidates.begin(), candidates.end(),
              [](const Link& a, const Link& b) {
                if (a.similarity != b.similarity) {
                  return a.similarity > b.similarity;
                }
                return a.node < b.node;
              });
    if (config.ties == TieMode::kTruncate) {
      candidates.resize(k);
    } else {
      const double cutoff = candidates[k - 1].similarity;
      auto end = std::partition_point(
          candidates.begin(), candidates.end(),
          [cutoff](const Link& l) { return l.similarity >= cutoff; });
      candidates.erase(end, candidates.end());
    }
  }
  std::sort(candidates.begin(), candidates.end(), ByNode);
  return candidates;
}

NeighborGraph NeighborGraph::FromOutLinks(
    std::vector<std::vector<Link>> out_links) {
  NeighborGraph g;
  const std::size_t n = out_links.size();
  g.in_.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    const auto& out = out_links[u];
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Link& l = out[i];
      if (l.node >= n) {
        throw std::invalid_argument("link " + std::to_string(u) + "->" +
                                    std::to_string(l.node) +
                                    " targets an unknown node");
      }
      if (l.node == u) {
        throw std::invalid_argument("self link on node " + std::to_string(u));
      }
      if (i > 0 && !(out[i - 1].node < l.node)) {
        throw std::invalid_argument("out-links of node " + std::to_string(u) +
                                    " are not strictly ascending");
      }
      // u ascends, so every in-list is filled in ascending order.
      g.in_[l.node].push_back({u, l.similarity});
      ++g.link_count_;
    }
  }
  g.out_ = std::move(out_links);
  return g;
}

bool NeighborGraph::HasLink(NodeId from, NodeId to) const {
  const auto& out = out_.at(from);
  return std::binary_search(out.begin(), out.end(), Link{to, 0.0}, ByNode);
}

PerturbationSet NeighborGraph::Insert(std::span<const double> similarities,
                                      const Config& config) {
  const auto newcomer = static_cast<NodeId>(out_.size());
  if (similarities.size() != out_.size()) {
    throw std::invalid_argument("expected " + std::to_string(out_.size()) +
                                " similarities, got " +
                                std::to_string(similarities.size()));
  }
  out_.emplace_back();
  in_.emplace_back();

  std::vector<NodeId> touched;

  // Earlier nodes first: each one considers the newcomer as a candidate.
  // Anything outside its current list is already below its cutoff, and the
  // cutoff can only rise, so the current list plus the newcomer suffices.
  for (NodeId u = 0; u < newcomer; ++u) {
    const double s = similarities[u];
    if (!(s > config.sim_threshold)) continue;
    std::vector<Link>& out = out_[u];
    std::vector<Link> candidates = out;
    candidates.push_back({newcomer, s});
    std::vector<Link> selected = SelectNearest(std::move(candidates), config);
    if (selected == out) continue;
    for (const Link& old : out) {
      if (!std::binary_search(selected.begin(), selected.end(), old, ByNode)) {
        EraseNode(in_[old.node], u);
        --link_count_;
        touched.push_back(old.node);
      }
    }
    if (!selected.empty() && selected.back().node == newcomer) {
      in_[newcomer].push_back({u, s});
      ++link_count_;
      touched.push_back(newcomer);
    }
    out = std::move(selected);
    touched.push_back(u);
  }

  std::vector<Link> candidates;
  candidates.reserve(newcomer);
  for (NodeId u = 0; u < newcomer; ++u) candidates.push_back({u, similarities[u]});
  out_[newcomer] = SelectNearest(std::move(candidates), config);
  for (const Link& l : out_[newcomer]) {
    InsertSorted(in_[l.node], {newcomer, l.similarity});
    ++link_count_;
    touched.push_back(l.node);
    touched.push_back(newcomer);
  }

  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  return touched;
}

std::vector<NodeId> NeighborGraph::Neighborhood(NodeId v, int depth) const {
  if (v >= out_.size()) {
    throw std::out_of_range("unknown node " + std::to_string(v));
  }
  if (depth != 1 && depth != 2) {
    throw std::invalid_argument("neighborhood depth must be 1 or 2");
  }
  std::vector<NodeId> result{v};
  for (const Link& l : out_[v]) result.push_back(l.node);
  for (const Link& l : in_[v]) result.push_back(l.node);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  if (depth == 2) {
    std::vector<NodeId> wider;
    for (NodeId u : result) {
      auto inner = Neighborhood(u, 1);
      wider.insert(wider.end(), inner.begin(), inner.end());
    }
    std::sort(wider.begin(), wider.end());
    wider.erase(std::unique(wider.begin(), wider.end()), wider.end());
    return wider;
  }
  return result;
}

}  // namespace germen
