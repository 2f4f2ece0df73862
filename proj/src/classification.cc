#include "germen/classification.h"

#include <stdexcept>

namespace germen {

nlohmann::json ClassificationToJson(const Classification& classification) {
  nlohmann::json j = nlohmann::json::array();
  for (const LabeledGroup& g : classification) {
    j.push_back({{"label", g.label}, {"doc_ids", g.doc_ids}});
  }
  return j;
}

Classification ClassificationFromJson(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("classification must be a JSON array");
  }
  Classification result;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("label") ||
        !item.contains("doc_ids") || !item["label"].is_string() ||
        !item["doc_ids"].is_array()) {
      throw std::invalid_argument(
          "classification entries need a string 'label' and a 'doc_ids' "
          "array");
    }
    LabeledGroup group;
    group.label = item["label"].get<std::string>();
    for (const auto& id : item["doc_ids"]) {
      if (!id.is_string()) {
        throw std::invalid_argument("doc_ids must be strings");
      }
      group.doc_ids.push_back(id.get<std::string>());
    }
    result.push_back(std::move(group));
  }
  return result;
}

void WriteClassification(std::ostream& out,
                         const Classification& classification) {
  out << ClassificationToJson(classification).dump(2) << "\n";
}

Classification ReadClassification(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid classification JSON: ") +
                                e.what());
  }
  return ClassificationFromJson(j);
}

}  // namespace germen
