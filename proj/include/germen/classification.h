#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace germen {

// A labeled grouping of documents, the exchange format between curation and
// evaluation. On disk: a JSON array of {"label": ..., "doc_ids": [...]}.
struct LabeledGroup {
  std::string label;
  std::vector<std::string> doc_ids;

  friend bool operator==(const LabeledGroup&, const LabeledGroup&) = default;
};

using Classification = std::vector<LabeledGroup>;

nlohmann::json ClassificationToJson(const Classification& classification);

// Throws std::invalid_argument on a malformed document.
Classification ClassificationFromJson(const nlohmann::json& j);

void WriteClassification(std::ostream& out,
                         const Classification& classification);
Classification ReadClassification(std::istream& in);

}  // namespace germen
