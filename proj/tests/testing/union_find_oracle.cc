#include "testing/union_find_oracle.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace germen::testing {

std::vector<NoyauComponent> UnionFindComponents(const Labeling& labeling,
                                                int valence, ValenceMode mode) {
  const std::size_t n = labeling.size();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](NodeId x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  const auto selected = [&](const HeadList& h) {
    const auto want = static_cast<std::size_t>(valence);
    return mode == ValenceMode::kExact ? h.size() == want : h.size() >= want;
  };
  for (NodeId v = 0; v < n; ++v) {
    const HeadList& h = labeling.heads(v);
    if (!selected(h)) continue;
    for (NodeId x : h) parent[find(x)] = find(h[0]);
  }
  std::map<NodeId, NoyauComponent> by_root;
  for (NodeId v = 0; v < n; ++v) {
    if (labeling.IsHead(v)) by_root[find(v)].noyaux.push_back(v);
  }
  for (NodeId v = 0; v < n; ++v) {
    const HeadList& h = labeling.heads(v);
    if (h.size() == 1) {
      by_root[find(h[0])].documents.push_back(v);
    } else if (selected(h)) {
      by_root[find(h[0])].documents.push_back(v);
    }
  }
  std::vector<NoyauComponent> out;
  for (auto& [root, c] : by_root) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const NoyauComponent& a, const NoyauComponent& b) {
              if (a.documents.size() != b.documents.size()) {
                return a.documents.size() > b.documents.size();
              }
              return a.noyaux.front() < b.noyaux.front();
            });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i + 1;
  return out;
}

Labeling RandomLabeling(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t heads = 2 + rng() % 20;
  const std::size_t n = heads + rng() % 60;
  std::vector<HeadList> lists(n);
  for (NodeId v = 0; v < heads; ++v) lists[v] = {v};
  for (NodeId v = static_cast<NodeId>(heads); v < n; ++v) {
    const std::size_t k = 1 + rng() % std::min<std::size_t>(4, heads);
    std::set<NodeId> chosen;
    while (chosen.size() < k) chosen.insert(static_cast<NodeId>(rng() % heads));
    lists[v].assign(chosen.begin(), chosen.end());
  }
  return Labeling(std::move(lists));
}

}  // namespace germen::testing
