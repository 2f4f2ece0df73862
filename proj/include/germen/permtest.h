#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "germen/engine.h"

namespace germen {

// Order-free view of an engine: everything keyed and named by doc id.
struct DocumentState {
  std::vector<std::string> heads;  // sorted doc ids
  double density = 0.0;
  NodeCategory category = NodeCategory::kIsole;
};

struct StateSignature {
  std::vector<std::string> head_set;  // sorted doc ids
  std::map<std::string, DocumentState> documents;
};

StateSignature Signature(const Engine& engine);

// Empty when equal (densities compared bit for bit), otherwise a description
// of the first difference found.
std::string FirstDivergence(const StateSignature& expected,
                            const StateSignature& actual);

struct PermutationCheck {
  bool passed = true;
  std::size_t permutations_run = 0;
  std::string divergence;  // set on failure
};

// Ingests `corpus` in file order, then in `permutations` random orders drawn
// from `seed`, and compares every run with the first.
PermutationCheck CheckOrderInvariance(const std::vector<RawDocument>& corpus,
                                      const Config& config,
                                      std::size_t permutations,
                                      std::uint64_t seed);

}  // namespace germen
