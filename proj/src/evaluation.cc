#include "germen/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace germen {

EvaluationReport Evaluate(const Classification& reference,
                          const Classification& predicted) {
  if (reference.empty()) {
    throw std::invalid_argument("reference classification is empty");
  }
  std::unordered_set<std::string> scored;
  for (const LabeledGroup& g : reference) {
    if (g.doc_ids.empty()) {
      throw std::invalid_argument("reference class '" + g.label +
                                  "' has no documents");
    }
    scored.insert(g.doc_ids.begin(), g.doc_ids.end());
  }

  // Restricted prediction: doc -> groups holding it, and group sizes.
  std::unordered_map<std::string, std::vector<std::size_t>> groups_of;
  std::vector<std::size_t> group_size(predicted.size(), 0);
  for (std::size_t g = 0; g < predicted.size(); ++g) {
    std::unordered_set<std::string> unique(predicted[g].doc_ids.begin(),
                                           predicted[g].doc_ids.end());
    for (const std::string& id : unique) {
      if (!scored.contains(id)) continue;
      groups_of[id].push_back(g);
      ++group_size[g];
    }
  }

  EvaluationReport report;
  for (const LabeledGroup& ref : reference) {
    ClassScore score;
    score.label = ref.label;
    std::unordered_set<std::string> members(ref.doc_ids.begin(),
                                            ref.doc_ids.end());
    score.reference_size = members.size();
    std::vector<std::size_t> overlap(predicted.size(), 0);
    for (const std::string& id : members) {
      auto it = groups_of.find(id);
      if (it == groups_of.end()) continue;
      for (std::size_t g : it->second) ++overlap[g];
    }
    for (std::size_t g = 0; g < predicted.size(); ++g) {
      if (overlap[g] == 0) continue;
      const bool better =
          !score.matched_group || overlap[g] > score.found ||
          (overlap[g] == score.found && group_size[g] > score.group_size);
      if (better) {
        score.matched_group = g;
        score.found = overlap[g];
        score.group_size = group_size[g];
      }
    }
    if (score.matched_group) {
      score.recall = static_cast<double>(score.found) /
                     static_cast<double>(score.reference_size);
      score.precision = static_cast<double>(score.found) /
                        static_cast<double>(score.group_size);
    }
    report.classes.push_back(std::move(score));
  }

  std::vector<std::size_t> order(report.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&report](std::size_t a, std::size_t b) {
                     return report.classes[a].precision >
                            report.classes[b].precision;
                   });
  std::size_t cumulative = 0;
  for (std::size_t i : order) {
    const ClassScore& s = report.classes[i];
    cumulative += s.reference_size;
    report.curve.push_back({cumulative, s.recall, s.precision});
  }
  return report;
}

void WriteCurveCsv(std::ostream& out, const EvaluationReport& report) {
  out << "cum_docs,recall,precision\n";
  char buf[96];
  for (const CurvePoint& p : report.curve) {
    std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f\n", p.cumulative_docs,
                  p.recall, p.precision);
    out << buf;
  }
}

}  // namespace germen
