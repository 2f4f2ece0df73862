#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace germen {

using DescriptorId = std::uint32_t;

// Bijection between descriptor strings and dense ids, assigned in first-seen
// order. The registry only grows.
class DescriptorRegistry {
 public:
  // Returns the id of `name`, registering it if unseen. Surrounding
  // whitespace is trimmed; an empty name is rejected.
  DescriptorId Intern(std::string_view name);

  // False when the descriptor is unknown.
  bool Find(std::string_view name, DescriptorId* id) const;

  const std::string& Name(DescriptorId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, DescriptorId> ids_;
};

std::string_view TrimWhitespace(std::string_view s);

// A document as read from a corpus, before its descriptors are registered.
struct RawDocument {
  std::string doc_id;
  std::vector<std::pair<std::string, std::uint32_t>> terms;
};

struct TermCount {
  DescriptorId descriptor;
  std::uint32_t count;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

// Raw descriptor counts of one document. Counts are kept sorted by
// descriptor id and are strictly positive.
class DocumentVector {
 public:
  DocumentVector() = default;

  // Throws std::invalid_argument on a zero count or a repeated descriptor.
  DocumentVector(std::string doc_id, std::uint32_t arrival_index,
                 std::vector<TermCount> counts);

  const std::string& doc_id() const { return doc_id_; }
  std::uint32_t arrival_index() const { return arrival_index_; }
  std::span<const TermCount> counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return counts_.empty(); }

 private:
  std::string doc_id_;
  std::uint32_t arrival_index_ = 0;
  std::vector<TermCount> counts_;
  std::uint64_t total_ = 0;
};

struct WeightedDescriptor {
  DescriptorId descriptor;
  double value;
};

// Point on the Hellinger sphere: components sqrt(x_i / x), sorted by
// descriptor id.
class NormalizedVector {
 public:
  NormalizedVector() = default;
  explicit NormalizedVector(std::vector<WeightedDescriptor> components)
      : components_(std::move(components)) {}

  std::span<const WeightedDescriptor> components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  // 0 when the descriptor is absent.
  double ValueOf(DescriptorId descriptor) const;

 private:
  std::vector<WeightedDescriptor> components_;
};

class EmptyDocumentError : public std::invalid_argument {
 public:
  explicit EmptyDocumentError(const std::string& doc_id)
      : std::invalid_argument("empty document: '" + doc_id + "'") {}
};

NormalizedVector Normalize(const DocumentVector& doc);

// Cosine of two normalized vectors. The products over the shared support are
// summed in ascending order of value, so the result does not depend on
// descriptor numbering or argument order.
double Similarity(const NormalizedVector& u, const NormalizedVector& v);

// sqrt(2 (1 - cos)), clamped at zero against rounding.
double HellingerDistance(const NormalizedVector& u, const NormalizedVector& v);

// Sums `values` after sorting them ascending. Used wherever a sum must be
// reproducible bit for bit regardless of the order terms were produced in.
double CanonicalSum(std::vector<double> values);

}  // namespace germen
