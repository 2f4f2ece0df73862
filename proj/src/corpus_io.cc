#include "germen/corpus_io.h"

#include <charconv>
#include <set>
#include <unordered_set>

namespace germen {

RawDocument ParseCorpusLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  if (fields.size() > 1 && TrimWhitespace(fields.back()).empty()) {
    fields.pop_back();
  }

  RawDocument doc;
  doc.doc_id = std::string(TrimWhitespace(fields[0]));
  if (doc.doc_id.empty()) throw std::invalid_argument("missing document id");

  std::set<std::string> seen;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::string_view field = fields[i];
    const std::size_t eq = field.rfind('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("field '" + std::string(field) +
                                  "' is not term=count");
    }
    const std::string_view term = TrimWhitespace(field.substr(0, eq));
    const std::string_view digits = TrimWhitespace(field.substr(eq + 1));
    if (term.empty()) {
      throw std::invalid_argument("empty term in '" + std::string(field) + "'");
    }
    std::uint32_t count = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), count);
    if (ec != std::errc() || end != digits.data() + digits.size() ||
        digits.empty() || count == 0) {
      throw std::invalid_argument("count of '" + std::string(term) +
                                  "' is not a positive integer");
    }
    if (!seen.emplace(term).second) {
      throw std::invalid_argument("duplicate term '" + std::string(term) + "'");
    }
    doc.terms.emplace_back(std::string(term), count);
  }
  if (doc.terms.empty()) throw EmptyDocumentError(doc.doc_id);
  return doc;
}

std::vector<RawDocument> ReadCorpus(std::istream& in) {
  std::vector<RawDocument> docs;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (TrimWhitespace(line).empty()) continue;
    try {
      RawDocument doc = ParseCorpusLine(line);
      if (!ids.insert(doc.doc_id).second) {
        throw std::invalid_argument("duplicate document id '" + doc.doc_id +
                                    "'");
      }
      docs.push_back(std::move(doc));
    } catch (const std::invalid_argument& e) {
      throw CorpusFormatError(number, e.what());
    }
  }
  return docs;
}

std::string FormatCorpusLine(const RawDocument& doc) {
  std::string line = doc.doc_id;
  for (const auto& [term, count] : doc.terms) {
    line += '\t';
    line += term;
    line += '=';
    line += std::to_string(count);
  }
  return line;
}

}  // namespace germen
