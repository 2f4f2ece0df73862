#include "germen/service.h"

#include <mutex>

#include "germen/saliency.h"
#include "httplib.h"

namespace germen {
namespace {

ServiceResponse Error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

nlohmann::json ParseBody(const std::string& body) {
  nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::invalid_argument("request body must be a JSON object");
  }
  return j;
}

void Reply(httplib::Response& res, const ServiceResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

ClassotronService::ClassotronService(Engine engine, int valence,
                                     ValenceMode mode, std::ostream* journal,
                                     std::istream* history)
    : engine_(std::move(engine)),
      valence_(valence),
      mode_(mode),
      session_(ConnectedComponents(
          BuildNoyauGraph(engine_.labeling(), valence, mode),
          engine_.labeling())) {
  if (history != nullptr) ReplayJournal(*history, engine_, session_);
  if (journal != nullptr) journal_.emplace(journal);
}

CurationSession ClassotronService::session() const {
  std::shared_lock lock(mutex_);
  return session_;
}

nlohmann::json ClassotronService::NoyauSummary(NodeId head) const {
  const ClassProfile profile = ProfileClass(engine_, head);
  std::size_t size = 0;
  for (const ClassMember& m : profile.members) size += m.head_count == 1;
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < profile.terms.size() && i < 3; ++i) {
    terms.push_back(
        {{"term", engine_.registry().Name(profile.terms[i].descriptor)},
         {"per_mille", PerMille(profile.terms[i].contribution)}});
  }
  return {{"head", engine_.doc_id(head)},
          {"size", size},
          {"density", engine_.densities().at(head)},
          {"top_terms", std::move(terms)}};
}

nlohmann::json ClassotronService::ComponentJson(
    const CuratedComponent& c) const {
  nlohmann::json noyaux = nlohmann::json::array();
  for (NodeId h : c.component.noyaux) noyaux.push_back(NoyauSummary(h));
  nlohmann::json groups = nlohmann::json::array();
  for (const ManualGroup& g : c.groups) {
    std::vector<std::string> ids;
    for (NodeId h : g.noyaux) ids.push_back(engine_.doc_id(h));
    groups.push_back({{"label", g.label}, {"noyaux", ids}});
  }
  return {{"id", c.component.id},
          {"status", std::string(ToString(c.status))},
          {"label", c.label},
          {"document_count", c.component.document_count()},
          {"noyaux", std::move(noyaux)},
          {"groups", std::move(groups)}};
}

ServiceResponse ClassotronService::ListComponents(
    std::optional<int> valence, std::size_t min_documents) const {
  const int v = valence.value_or(valence_);
  if (v < 2) return Error(400, "valence must be at least 2");
  nlohmann::json list = nlohmann::json::array();
  std::shared_lock lock(mutex_);
  if (v == valence_) {
    for (const CuratedComponent& c : session_.components()) {
      if (c.component.document_count() >= min_documents) {
        list.push_back(ComponentJson(c));
      }
    }
  } else {
    const CurationSession preview(ConnectedComponents(
        BuildNoyauGraph(engine_.labeling(), v, mode_), engine_.labeling()));
    for (const CuratedComponent& c : preview.components()) {
      if (c.component.document_count() >= min_documents) {
        list.push_back(ComponentJson(c));
      }
    }
  }
  return {200,
          {{"valence", v}, {"editable", v == valence_}, {"components", list}}};
}

ServiceResponse ClassotronService::ComponentDetail(std::size_t id) const {
  std::shared_lock lock(mutex_);
  const CuratedComponent* found = nullptr;
  for (const CuratedComponent& c : session_.components()) {
    if (c.component.id == id) found = &c;
  }
  if (found == nullptr) {
    return Error(404, "unknown component " + std::to_string(id));
  }
  nlohmann::json j = ComponentJson(*found);
  std::vector<std::string> docs;
  for (NodeId v : found->component.documents) docs.push_back(engine_.doc_id(v));
  j["documents"] = docs;
  nlohmann::json edges = nlohmann::json::array();
  const NoyauGraph graph = BuildNoyauGraph(engine_.labeling(), valence_, mode_);
  const auto& noyaux = found->component.noyaux;
  for (const NoyauEdge& e : graph.edges) {
    if (!std::binary_search(noyaux.begin(), noyaux.end(), e.a)) continue;
    std::vector<std::string> support;
    for (NodeId v : e.documents) support.push_back(engine_.doc_id(v));
    edges.push_back({{"a", engine_.doc_id(e.a)},
                     {"b", engine_.doc_id(e.b)},
                     {"documents", support}});
  }
  j["edges"] = std::move(edges);
  return {200, std::move(j)};
}

ServiceResponse ClassotronService::NoyauDetail(
    const std::string& head_doc_id) const {
  const auto node = engine_.FindNode(head_doc_id);
  if (!node || !engine_.labeling().IsHead(*node)) {
    return Error(404, "'" + head_doc_id + "' is not a class head");
  }
  const ClassProfile profile = ProfileClass(engine_, *node);
  nlohmann::json members = nlohmann::json::array();
  for (const ClassMember& m : profile.members) {
    std::vector<std::string> heads;
    for (NodeId h : engine_.labeling().heads(m.node)) {
      heads.push_back(engine_.doc_id(h));
    }
    members.push_back({{"doc_id", engine_.doc_id(m.node)},
                       {"density", m.density},
                       {"heads", heads}});
  }
  nlohmann::json terms = nlohmann::json::array();
  for (const TermWeight& t : profile.terms) {
    terms.push_back({{"term", engine_.registry().Name(t.descriptor)},
                     {"contribution", t.contribution},
                     {"per_mille", PerMille(t.contribution)}});
  }
  std::shared_lock lock(mutex_);
  return {200,
          {{"head", head_doc_id},
           {"component", session_.ComponentOf(*node)},
           {"members", std::move(members)},
           {"terms", std::move(terms)}}};
}

ServiceResponse ClassotronService::Sizes() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [size, count] : SizeDistribution(engine_.labeling())) {
    rows.push_back({{"size", size}, {"count", count}});
  }
  return {200, {{"sizes", std::move(rows)}}};
}

ServiceResponse ClassotronService::Merge(const std::string& body) {
  try {
    const nlohmann::json j = ParseBody(body);
    if (!j.contains("noyaux") || !j["noyaux"].is_array() ||
        !j.contains("label") || !j["label"].is_string()) {
      return Error(400, "merge needs a 'noyaux' array and a 'label' string");
    }
    std::vector<std::string> ids;
    std::vector<NodeId> noyaux;
    for (const auto& id : j["noyaux"]) {
      if (!id.is_string()) return Error(400, "noyaux must be doc ids");
      const auto node = engine_.FindNode(id.get<std::string>());
      if (!node) return Error(404, "unknown document '" + id.get<std::string>() + "'");
      ids.push_back(id.get<std::string>());
      noyaux.push_back(*node);
    }
    const std::string label = j["label"].get<std::string>();
    std::unique_lock lock(mutex_);
    session_.Merge(std::move(noyaux), label);
    if (journal_) journal_->RecordMerge(ids, label);
    return {200, ComponentJson(session_.component(
                     session_.ComponentOf(engine_.FindNode(ids[0]).value())))};
  } catch (const std::invalid_argument& e) {
    return Error(400, e.what());
  }
}

ServiceResponse ClassotronService::SetStatus(const std::string& body) {
  try {
    const nlohmann::json j = ParseBody(body);
    if (!j.contains("component") || !j["component"].is_number_unsigned() ||
        !j.contains("status") || !j["status"].is_string()) {
      return Error(400,
                   "status needs a 'component' id and a 'status' string");
    }
    const auto id = j["component"].get<std::size_t>();
    const ComponentStatus status =
        ParseComponentStatus(j["status"].get<std::string>());
    std::optional<std::string> label;
    if (j.contains("label")) {
      if (!j["label"].is_string()) return Error(400, "label must be a string");
      label = j["label"].get<std::string>();
    }
    std::unique_lock lock(mutex_);
    try {
      session_.component(id);
    } catch (const CurationError& e) {
      return Error(404, e.what());
    }
    session_.SetStatus(id, status, label);
    if (journal_) journal_->RecordStatus(id, status, label);
    return {200, ComponentJson(session_.component(id))};
  } catch (const std::invalid_argument& e) {
    return Error(400, e.what());
  }
}

ServiceResponse ClassotronService::Export(bool validated_only) const {
  ExportOptions options;
  options.validated_only = validated_only;
  std::shared_lock lock(mutex_);
  try {
    return {200, ClassificationToJson(
                     ExportClassification(session_, engine_, options))};
  } catch (const CurationError& e) {
    return Error(409, e.what());
  }
}

void ClassotronService::Bind(httplib::Server& server) {
  server.Get("/components", [this](const httplib::Request& req,
                                   httplib::Response& res) {
    std::optional<int> valence;
    std::size_t min_docs = 0;
    try {
      if (req.has_param("valence")) {
        valence = std::stoi(req.get_param_value("valence"));
      }
      if (req.has_param("min_docs")) {
        min_docs = std::stoul(req.get_param_value("min_docs"));
      }
    } catch (const std::exception&) {
      return Reply(res, Error(400, "valence and min_docs must be integers"));
    }
    Reply(res, ListComponents(valence, min_docs));
  });
  server.Get(R"(/components/(\d+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               Reply(res, ComponentDetail(std::stoul(req.matches[1].str())));
             });
  server.Get(R"(/noyaux/(.+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               Reply(res, NoyauDetail(req.matches[1].str()));
             });
  server.Get("/sizes", [this](const httplib::Request&, httplib::Response& res) {
    Reply(res, Sizes());
  });
  server.Post("/merge",
              [this](const httplib::Request& req, httplib::Response& res) {
                Reply(res, Merge(req.body));
              });
  server.Post("/status",
              [this](const httplib::Request& req, httplib::Response& res) {
                Reply(res, SetStatus(req.body));
              });
  server.Get("/export", [this](const httplib::Request& req,
                               httplib::Response& res) {
    const bool validated_only = req.has_param("validated_only") &&
                                req.get_param_value("validated_only") == "true";
    Reply(res, Export(validated_only));
  });
}

}  // namespace germen
