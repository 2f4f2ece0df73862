#include "germen/config.h"

#include <stdexcept>

namespace germen {

void Config::Validate() const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(sim_threshold >= 0.0 && sim_threshold < 1.0)) {
    throw std::invalid_argument("similarity threshold must lie in [0, 1)");
  }
}

std::string_view ToString(Rule rule) { return rule == Rule::kA ? "A" : "B"; }

std::string_view ToString(DensityMode mode) {
  return mode == DensityMode::kSum ? "sum" : "coefficient";
}

std::string_view ToString(SurplombantMode mode) {
  return mode == SurplombantMode::kStrictGreater ? "strict" : "dominates";
}

std::string_view ToString(TieMode mode) {
  return mode == TieMode::kInclude ? "include" : "truncate";
}

Rule ParseRule(std::string_view s) {
  if (s == "A" || s == "a") return Rule::kA;
  if (s == "B" || s == "b") return Rule::kB;
  throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

DensityMode ParseDensityMode(std::string_view s) {
  if (s == "sum") return DensityMode::kSum;
  if (s == "coefficient") return DensityMode::kClusteringCoefficient;
  throw std::invalid_argument("unknown density mode '" + std::string(s) + "'");
}

SurplombantMode ParseSurplombantMode(std::string_view s) {
  if (s == "strict") return SurplombantMode::kStrictGreater;
  if (s == "dominates") return SurplombantMode::kDominatesNeighborhood;
  throw std::invalid_argument("unknown surplombant mode '" + std::string(s) +
                              "'");
}

TieMode ParseTieMode(std::string_view s) {
  if (s == "include") return TieMode::kInclude;
  if (s == "truncate") return TieMode::kTruncate;
  throw std::invalid_argument("unknown tie mode '" + std::string(s) + "'");
}

}  // namespace germen
