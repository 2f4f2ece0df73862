#include "germen/vector_space.h"

#include <algorithm>
#include <cmath>

namespace germen {

std::string_view TrimWhitespace(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(kSpace);
  return s.substr(begin, end - begin + 1);
}

DescriptorId DescriptorRegistry::Intern(std::string_view name) {
  name = TrimWhitespace(name);
  if (name.empty()) throw std::invalid_argument("empty descriptor name");
  std::string key(name);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<DescriptorId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

bool DescriptorRegistry::Find(std::string_view name, DescriptorId* id) const {
  auto it = ids_.find(std::string(TrimWhitespace(name)));
  if (it == ids_.end()) return false;
  if (id != nullptr) *id = it->second;
  return true;
}

DocumentVector::DocumentVector(std::string doc_id, std::uint32_t arrival_index,
                               std::vector<TermCount> counts)
    : doc_id_(std::move(doc_id)),
      arrival_index_(arrival_index),
      counts_(std::move(counts)) {
  std::sort(counts_.begin(), counts_.end(),
            [](const TermCount& a, const TermCount& b) {
              return a.descriptor < b.descriptor;
            });
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i].count == 0) {
      throw std::invalid_argument("zero count in document '" + doc_id_ + "'");
    }
    if (i > 0 && counts_[i].descriptor == counts_[i - 1].descriptor) {
      throw std::invalid_argument("repeated descriptor in document '" +
                                  doc_id_ + "'");
    }
    total_ += counts_[i].count;
  }
}

double NormalizedVector::ValueOf(DescriptorId descriptor) const {
  auto it = std::lower_bound(
      components_.begin(), components_.end(), descriptor,
      [](const WeightedDescriptor& c, DescriptorId d) { return c.descriptor < d; });
  if (it == components_.end() || it->descriptor != descriptor) return 0.0;
  return it->value;
}

NormalizedVector Normalize(const DocumentVector& doc) {
  if (doc.empty()) throw EmptyDocumentError(doc.doc_id());
  const double total = static_cast<double>(doc.total());
  std::vector<WeightedDescriptor> components;
  components.reserve(doc.counts().size());
  for (const TermCount& tc : doc.counts()) {
    components.push_back(
        {tc.descriptor, std::sqrt(static_cast<double>(tc.count) / total)});
  }
  return NormalizedVector(std::move(components));
}

double CanonicalSum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

double Similarity(const NormalizedVector& u, const NormalizedVector& v) {
  auto a = u.components();
  auto b = v.components();
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<double> products;
  products.reserve(a.size());
  // Both supports are sorted: a merge walk visits the intersection once.
  auto it = b.begin();
  for (const WeightedDescriptor& c : a) {
    it = std::lower_bound(it, b.end(), c.descriptor,
                          [](const WeightedDescriptor& x, DescriptorId d) {
                            return x.descriptor < d;
                          });
    if (it == b.end()) break;
    if (it->descriptor == c.descriptor) products.push_back(c.value * it->value);
  }
  return std::min(CanonicalSum(std::move(products)), 1.0);
}

double HellingerDistance(const NormalizedVector& u, const NormalizedVector& v) {
  const double gap = 1.0 - Similarity(u, v);
  return std::sqrt(2.0 * std::max(gap, 0.0));
}

}  // namespace germen
