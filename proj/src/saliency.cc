#include "germen/saliency.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace germen {
namespace {

bool HasHead(const HeadList& heads, NodeId head) {
  return std::binary_search(heads.begin(), heads.end(), head);
}

std::string FormatMember(const ClassMember& m, const Engine& engine) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7f", m.density);
  std::string line = std::to_string(m.head_count);
  line.resize(std::max<std::size_t>(line.size(), 3), ' ');
  std::string id = engine.doc_id(m.node);
  id.resize(std::max<std::size_t>(id.size(), 12), ' ');
  return line + " " + id + " " + buf;
}

}  // namespace

std::vector<std::pair<NodeId, NodeId>> IntraClassLinks(const Engine& engine,
                                                       NodeId head) {
  const Labeling& labeling = engine.labeling();
  if (head >= labeling.size() || !labeling.IsHead(head)) {
    throw std::invalid_argument("node " + std::to_string(head) +
                                " is not a class head");
  }
  std::vector<std::pair<NodeId, NodeId>> links;
  for (NodeId t = 0; t < labeling.size(); ++t) {
    if (!HasHead(labeling.heads(t), head)) continue;
    for (const Link& l : engine.graph().OutLinks(t)) {
      if (HasHead(labeling.heads(l.node), head)) links.emplace_back(t, l.node);
    }
  }
  return links;
}

ClassProfile ProfileClass(const Engine& engine, NodeId head) {
  const auto links = IntraClassLinks(engine, head);
  const Labeling& labeling = engine.labeling();
  const DensityLandscape& densities = engine.densities();

  ClassProfile profile;
  profile.head = head;
  profile.link_count = links.size();
  for (NodeId v = 0; v < labeling.size(); ++v) {
    const HeadList& heads = labeling.heads(v);
    if (HasHead(heads, head)) {
      profile.members.push_back({v, densities.at(v), heads.size()});
    }
  }
  std::sort(profile.members.begin(), profile.members.end(),
            [&engine](const ClassMember& a, const ClassMember& b) {
              if (a.density != b.density) return a.density > b.density;
              return engine.doc_id(a.node) < engine.doc_id(b.node);
            });

  std::map<DescriptorId, std::vector<double>> credits;
  std::vector<double> all;
  for (const auto& [t, u] : links) {
    const double weight = std::sqrt(densities.at(t) * densities.at(u));
    const NormalizedVector& a = engine.vector(t);
    const NormalizedVector& b = engine.vector(u);
    for (const WeightedDescriptor& c : a.components()) {
      const double other = b.ValueOf(c.descriptor);
      if (other == 0.0) continue;
      const double credit = weight * c.value * other;
      credits[c.descriptor].push_back(credit);
      all.push_back(credit);
    }
  }
  const double total = CanonicalSum(std::move(all));
  if (!(total > 0.0)) return profile;
  for (auto& [descriptor, values] : credits) {
    const double share = CanonicalSum(std::move(values)) / total;
    if (share > 0.0) profile.terms.push_back({descriptor, share});
  }
  const DescriptorRegistry& registry = engine.registry();
  std::sort(profile.terms.begin(), profile.terms.end(),
            [&registry](const TermWeight& a, const TermWeight& b) {
              if (a.contribution != b.contribution) {
                return a.contribution > b.contribution;
              }
              return registry.Name(a.descriptor) < registry.Name(b.descriptor);
            });
  return profile;
}

long PerMille(double share) { return std::lround(share * 1000.0); }

std::string RenderClassReport(const ClassProfile& profile,
                              const Engine& engine) {
  std::string out = "Class " + engine.doc_id(profile.head) + "\n";
  if (profile.members.empty()) return out;

  std::vector<const ClassMember*> core, bivalent, wider;
  for (const ClassMember& m : profile.members) {
    if (m.head_count <= 1) {
      core.push_back(&m);
    } else if (m.head_count == 2) {
      bivalent.push_back(&m);
    } else {
      wider.push_back(&m);
    }
  }

  constexpr std::size_t kLeftWidth = 40;
  std::string header = "Core documents:";
  header.resize(kLeftWidth, ' ');
  out += header + "Salient terms:\n";
  const std::size_t rows = std::max(core.size(), profile.terms.size());
  for (std::size_t i = 0; i < rows; ++i) {
    std::string left = i < core.size() ? FormatMember(*core[i], engine) : "";
    std::string line;
    if (i < profile.terms.size()) {
      left.resize(std::max(left.size() + 1, kLeftWidth), ' ');
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%4ld ",
                    PerMille(profile.terms[i].contribution));
      line = left + buf + engine.registry().Name(profile.terms[i].descriptor);
    } else {
      line = left;
    }
    out += line + "\n";
  }
  if (!bivalent.empty()) {
    out += "Bivalent documents:\n";
    for (const ClassMember* m : bivalent) out += FormatMember(*m, engine) + "\n";
  }
  if (!wider.empty()) {
    out += "Trivalent documents and more:\n";
    for (const ClassMember* m : wider) out += FormatMember(*m, engine) + "\n";
  }
  return out;
}

}  // namespace germen
