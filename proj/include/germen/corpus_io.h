#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "germen/vector_space.h"

namespace germen {

// Corpus files hold one document per line:
//   doc_id<TAB>term=count<TAB>term=count...
// Counts are positive integers; a term may not repeat within a line. Blank
// lines are ignored.
class CorpusFormatError : public std::runtime_error {
 public:
  CorpusFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Throws std::invalid_argument (EmptyDocumentError for a bare doc id).
RawDocument ParseCorpusLine(std::string_view line);

// Throws CorpusFormatError naming the first bad line, including a doc id seen
// on an earlier line.
std::vector<RawDocument> ReadCorpus(std::istream& in);

std::string FormatCorpusLine(const RawDocument& doc);

}  // namespace germen
