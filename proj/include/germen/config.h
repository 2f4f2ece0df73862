#pragma once

#include <string>
#include <string_view>

namespace germen {

// Head inheritance rule.
//   kA: a node takes the head of its most overhanging in-neighbor.
//   kB: a node takes the union of the heads of all overhanging in-neighbors.
enum class Rule { kA, kB };

enum class DensityMode {
  kSum,                    // sum of link similarities inside the 1-neighborhood
  kClusteringCoefficient,  // the same sum divided by n (n - 1)
};

enum class SurplombantMode {
  kStrictGreater,          // any in-neighbor of strictly greater density
  kDominatesNeighborhood,  // ... that also dominates the whole 1-neighborhood
};

// How ties at the K-th similarity are handled. kTruncate keeps exactly k
// links (oldest first among ties) and breaks order invariance; it exists only
// so the permutation checker can be shown to catch a broken tie rule.
enum class TieMode { kInclude, kTruncate };

struct Config {
  int k = 3;
  double sim_threshold = 0.1;
  Rule rule = Rule::kB;
  DensityMode density = DensityMode::kSum;
  SurplombantMode surplombant = SurplombantMode::kStrictGreater;
  TieMode ties = TieMode::kInclude;

  // Throws std::invalid_argument unless k >= 1 and 0 <= sim_threshold < 1.
  void Validate() const;

  friend bool operator==(const Config&, const Config&) = default;
};

std::string_view ToString(Rule rule);
std::string_view ToString(DensityMode mode);
std::string_view ToString(SurplombantMode mode);
std::string_view ToString(TieMode mode);

// Parsers accept the spellings produced by ToString plus the short CLI forms
// ("A", "sum", "coefficient", "strict", "dominates"). Throw on anything else.
Rule ParseRule(std::string_view s);
DensityMode ParseDensityMode(std::string_view s);
SurplombantMode ParseSurplombantMode(std::string_view s);
TieMode ParseTieMode(std::string_view s);

}  // namespace germen
