#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germen/engine.h"

namespace germen {

struct ClassMember {
  NodeId node;
  double density;
  std::size_t head_count;
};

struct TermWeight {
  DescriptorId descriptor;
  double contribution;  // share of the class's weighted intra-class links
};

struct ClassProfile {
  NodeId head = 0;
  std::vector<ClassMember> members;  // descending density, then by doc id
  std::vector<TermWeight> terms;     // descending contribution
  std::size_t link_count = 0;
};

// Directed links t -> t' whose endpoints both carry `head` among their heads.
// Throws std::invalid_argument when `head` is not a class head.
std::vector<std::pair<NodeId, NodeId>> IntraClassLinks(const Engine& engine,
                                                       NodeId head);

// Members and salient descriptors of the class headed by `head`.
//
// Each intra-class link t -> t' credits descriptor i with
//   sqrt(d(t) d(t')) * y_i(t) * y_i(t'),
// the descriptor's share of the cosine weighted by the geometric mean of the
// endpoint densities. Credits are summed over the class's links and
// normalized to sum to one. Ties are ordered by descriptor name. A class
// without intra-class links (or whose links carry no weight) has no terms.
ClassProfile ProfileClass(const Engine& engine, NodeId head);

// Rounds half away from zero.
long PerMille(double share);

// Plain-text class sheet: core members beside the salient terms (per mille),
// then bivalent and trivalent-or-more members.
std::string RenderClassReport(const ClassProfile& profile,
                              const Engine& engine);

}  // namespace germen
