#include "germen/permtest.h"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <random>

namespace germen {
namespace {

std::string Join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += items[i];
  }
  return out + "]";
}

std::string Real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

StateSignature Signature(const Engine& engine) {
  StateSignature sig;
  const std::vector<NodeCategory> categories = engine.Categories();
  for (NodeId v = 0; v < engine.size(); ++v) {
    DocumentState state;
    for (NodeId h : engine.labeling().heads(v)) {
      state.heads.push_back(engine.doc_id(h));
    }
    std::sort(state.heads.begin(), state.heads.end());
    state.density = engine.densities().at(v);
    state.category = categories[v];
    if (engine.labeling().IsHead(v)) sig.head_set.push_back(engine.doc_id(v));
    sig.documents.emplace(engine.doc_id(v), std::move(state));
  }
  std::sort(sig.head_set.begin(), sig.head_set.end());
  return sig;
}

std::string FirstDivergence(const StateSignature& expected,
                            const StateSignature& actual) {
  if (expected.head_set != actual.head_set) {
    return "head sets differ: " + Join(expected.head_set) + " vs " +
           Join(actual.head_set);
  }
  if (expected.documents.size() != actual.documents.size()) {
    return "document counts differ";
  }
  for (const auto& [id, want] : expected.documents) {
    auto it = actual.documents.find(id);
    if (it == actual.documents.end()) return "document '" + id + "' missing";
    const DocumentState& got = it->second;
    if (std::bit_cast<std::uint64_t>(want.density) !=
        std::bit_cast<std::uint64_t>(got.density)) {
      return "document '" + id + "' density " + Real(want.density) + " vs " +
             Real(got.density);
    }
    if (want.heads != got.heads) {
      return "document '" + id + "' heads " + Join(want.heads) + " vs " +
             Join(got.heads);
    }
    if (want.category != got.category) {
      return "document '" + id + "' category " +
             std::string(ToString(want.category)) + " vs " +
             std::string(ToString(got.category));
    }
  }
  return "";
}

PermutationCheck CheckOrderInvariance(const std::vector<RawDocument>& corpus,
                                      const Config& config,
                                      std::size_t permutations,
                                      std::uint64_t seed) {
  PermutationCheck check;
  if (permutations == 0) return check;

  const auto run = [&](const std::vector<std::size_t>& order) {
    Engine engine(config);
    for (std::size_t i : order) engine.Ingest(corpus[i]);
    return Signature(engine);
  };

  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  const StateSignature baseline = run(order);
  std::mt19937_64 rng(seed);
  for (std::size_t p = 0; p < permutations; ++p) {
    std::shuffle(order.begin(), order.end(), rng);
    ++check.permutations_run;
    const std::string divergence = FirstDivergence(baseline, run(order));
    if (!divergence.empty()) {
      check.passed = false;
      check.divergence =
          "permutation " + std::to_string(p + 1) + ": " + divergence;
      return check;
    }
  }
  return check;
}

}  // namespace germen
