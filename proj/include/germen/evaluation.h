#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "germen/classification.h"

namespace germen {

struct ClassScore {
  std::string label;
  std::size_t reference_size = 0;
  std::optional<std::size_t> matched_group;  // index into the prediction
  std::size_t found = 0;       // documents shared with the matched group
  std::size_t group_size = 0;  // matched group, restricted to scored docs
  double recall = 0.0;
  double precision = 0.0;
};

struct CurvePoint {
  std::size_t cumulative_docs;
  double recall;
  double precision;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct EvaluationReport {
  std::vector<ClassScore> classes;  // reference order
  std::vector<CurvePoint> curve;    // classes by descending precision
};

// Scores `predicted` against `reference`.
//
// Documents absent from the reference are dropped from the prediction first.
// Each reference class is matched to the predicted group sharing the most
// documents with it (ties: larger group, then lower index), and
//   recall    = shared / |reference class|
//   precision = shared / |matched group|.
// A class sharing nothing scores zero on both. The curve accumulates class
// sizes in order of descending precision (stable on ties), one point per
// class. Throws std::invalid_argument on an empty reference or an empty
// reference class.
EvaluationReport Evaluate(const Classification& reference,
                          const Classification& predicted);

// "cum_docs,recall,precision" header then one row per curve point.
void WriteCurveCsv(std::ostream& out, const EvaluationReport& report);

}  // namespace germen
