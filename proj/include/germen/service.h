#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>

#include "germen/aggregation.h"
#include "germen/engine.h"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace germen {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

// HTTP/JSON back end of the curation workflow over a fixed snapshot.
//
//   GET  /components?valence=V&min_docs=N   component listing
//   GET  /components/{id}                   one component with its edges
//   GET  /noyaux/{doc_id}                   members and salient terms
//   GET  /sizes                             noyau size distribution
//   POST /merge   {"noyaux": [doc_id...], "label": "..."}
//   POST /status  {"component": id, "status": "...", "label": "..."}
//   GET  /export?validated_only=true|false  curated classification
//
// The curation session is bound to the valence given at construction; a
// listing at another valence is a read-only preview. Mutations are applied
// one at a time under an exclusive lock and journaled after they succeed;
// reads share the lock and never see a half-applied mutation.
class ClassotronService {
 public:
  // `journal` may be null. `history`, when given, is replayed first.
  ClassotronService(Engine engine, int valence, ValenceMode mode,
                    std::ostream* journal, std::istream* history = nullptr);

  ServiceResponse ListComponents(std::optional<int> valence,
                                 std::size_t min_documents) const;
  ServiceResponse ComponentDetail(std::size_t id) const;
  ServiceResponse NoyauDetail(const std::string& head_doc_id) const;
  ServiceResponse Sizes() const;
  ServiceResponse Merge(const std::string& body);
  ServiceResponse SetStatus(const std::string& body);
  ServiceResponse Export(bool validated_only) const;

  // Registers the routes above on `server`.
  void Bind(httplib::Server& server);

  CurationSession session() const;
  const Engine& engine() const { return engine_; }

 private:
  nlohmann::json NoyauSummary(NodeId head) const;
  nlohmann::json ComponentJson(const CuratedComponent& c) const;

  const Engine engine_;
  const int valence_;
  const ValenceMode mode_;
  mutable std::shared_mutex mutex_;
  CurationSession session_;
  std::optional<CurationJournal> journal_;
};

}  // namespace germen
