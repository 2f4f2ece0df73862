#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "germen/engine.h"
#include "json.hpp"

namespace germen {

nlohmann::json ConfigToJson(const Config& config);
Config ConfigFromJson(const nlohmann::json& j);

// One dynamics-log record.
nlohmann::json IngestReportToJson(const IngestReport& report);

// Full engine state: configuration, descriptor table, and per node (in
// arrival order) the document counts, density, heads and out-links (target
// ascending). Reals are written in shortest round-trip form, so loading and
// continuing a stream reproduces an uninterrupted run bit for bit, and
// save -> load -> save is byte-identical.
nlohmann::json SnapshotToJson(const Engine& engine);

// Throws std::invalid_argument when the document is malformed or
// inconsistent.
Engine SnapshotFromJson(const nlohmann::json& j);

void SaveSnapshot(const Engine& engine, std::ostream& out);
Engine LoadSnapshot(std::istream& in);

std::string SnapshotText(const Engine& engine);

}  // namespace germen
