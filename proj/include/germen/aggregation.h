#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "germen/classification.h"
#include "germen/engine.h"
#include "germen/labeling.h"

namespace germen {

// Which multivalent documents tie noyaux together: those carrying exactly
// `valence` heads, or at least `valence` heads.
enum class ValenceMode { kExact, kAtLeast };

struct NoyauEdge {
  NodeId a;  // a < b
  NodeId b;
  std::vector<NodeId> documents;  // supporting multivalent documents

  friend bool operator==(const NoyauEdge&, const NoyauEdge&) = default;
};

// Undirected graph over the class heads. Edges sorted by (a, b).
struct NoyauGraph {
  int valence = 2;
  ValenceMode mode = ValenceMode::kExact;
  std::vector<NodeId> vertices;  // every head, ascending
  std::vector<NoyauEdge> edges;
};

// Throws std::invalid_argument when valence < 2.
NoyauGraph BuildNoyauGraph(const Labeling& labeling, int valence,
                           ValenceMode mode = ValenceMode::kExact);

struct NoyauComponent {
  std::size_t id = 0;             // 1-based rank in the listing
  std::vector<NodeId> noyaux;     // heads, ascending
  std::vector<NodeId> documents;  // exclusive members plus supporting docs

  std::size_t document_count() const { return documents.size(); }
  friend bool operator==(const NoyauComponent&,
                         const NoyauComponent&) = default;
};

// Connected components, largest document count first; ties go to the
// component with the smallest head.
std::vector<NoyauComponent> ConnectedComponents(const NoyauGraph& graph,
                                                const Labeling& labeling);

// Noyau size (head plus exclusive members) -> number of noyaux.
std::map<std::size_t, std::size_t> SizeDistribution(const Labeling& labeling);

enum class ComponentStatus { kPending, kValidated, kInvalidated };

std::string_view ToString(ComponentStatus status);
ComponentStatus ParseComponentStatus(std::string_view s);

struct ManualGroup {
  std::vector<NodeId> noyaux;  // ascending
  std::string label;

  friend bool operator==(const ManualGroup&, const ManualGroup&) = default;
};

struct CuratedComponent {
  NoyauComponent component;
  ComponentStatus status = ComponentStatus::kPending;
  std::string label;  // names the noyaux left outside manual groups
  std::vector<ManualGroup> groups;

  friend bool operator==(const CuratedComponent&,
                         const CuratedComponent&) = default;
};

class CurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Expert review state over one component listing.
class CurationSession {
 public:
  CurationSession() = default;
  explicit CurationSession(std::vector<NoyauComponent> components);

  const std::vector<CuratedComponent>& components() const {
    return components_;
  }
  // Throws CurationError for an unknown id.
  const CuratedComponent& component(std::size_t id) const;
  std::size_t ComponentOf(NodeId noyau) const;

  // Groups `noyaux` under `label`. Groups already sharing a noyau with the
  // request are absorbed into it, and the new label wins. All noyaux must
  // belong to one component that is not invalidated.
  void Merge(std::vector<NodeId> noyaux, std::string label);

  // Any transition is allowed. A label, when given, must be nonempty.
  void SetStatus(std::size_t id, ComponentStatus status,
                 std::optional<std::string> label = std::nullopt);

  friend bool operator==(const CurationSession&,
                         const CurationSession&) = default;

 private:
  CuratedComponent& Mutable(std::size_t id);

  std::vector<CuratedComponent> components_;
  std::map<NodeId, std::size_t> component_of_;
};

struct ExportOptions {
  bool validated_only = false;
  bool include_multivalent = true;  // docs whose heads all lie in the group
  bool exclude_isolated = true;
  std::size_t max_heads = 0;  // drop documents with more heads; 0 = no cap
};

// Labeled groups from every component that is not invalidated (or only the
// validated ones). Each manual group is exported under its label; the rest of
// a component is exported under the component label. Throws CurationError if
// a validated component has unlabeled noyaux. Unlabeled remainders of pending
// components are skipped.
Classification ExportClassification(const CurationSession& session,
                                    const Engine& engine,
                                    const ExportOptions& options = {});

// Append-only JSON-lines log of curation actions. Noyaux are named by the
// doc id of their head so a journal stays readable on its own.
class CurationJournal {
 public:
  using Clock = std::function<std::string()>;

  explicit CurationJournal(std::ostream* out, Clock clock = {});

  void RecordMerge(const std::vector<std::string>& noyaux,
                   const std::string& label);
  void RecordStatus(std::size_t component, ComponentStatus status,
                    const std::optional<std::string>& label);

 private:
  void Append(nlohmann::json entry);

  std::ostream* out_;
  Clock clock_;
};

// Current UTC time, ISO 8601 with seconds.
std::string UtcTimestamp();

// Re-applies every journaled action to `session`. Throws CurationError on an
// action that does not apply, std::invalid_argument on a malformed line.
void ReplayJournal(std::istream& in, const Engine& engine,
                   CurationSession& session);

}  // namespace germen
