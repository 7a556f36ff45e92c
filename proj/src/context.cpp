#include "latticegeom/context.hpp"

#include <unordered_set>

#include "latticegeom/errors.hpp"

namespace latticegeom {

namespace {

void check_unique(const std::vector<std::string>& ids, const char* kind) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second)
      throw FormatError(std::string("duplicate ") + kind + " id: " + id);
  }
}

std::size_t find_id(const std::vector<std::string>& ids, const std::string& id,
                    const char* kind) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  throw FormatError(std::string("unknown ") + kind + " id: " + id);
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             const std::vector<std::vector<int>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (incidence.size() != objects_.size())
    throw FormatError("incidence: expected " + std::to_string(objects_.size()) +
                      " rows, got " + std::to_string(incidence.size()));
  rows_.assign(objects_.size(), Bitset(attributes_.size()));
  cols_.assign(attributes_.size(), Bitset(objects_.size()));
  for (std::size_t g = 0; g < incidence.size(); ++g) {
    if (incidence[g].size() != attributes_.size())
      throw FormatError("incidence: row " + std::to_string(g) + " has " +
                        std::to_string(incidence[g].size()) + " entries, expected " +
                        std::to_string(attributes_.size()));
    for (std::size_t m = 0; m < incidence[g].size(); ++m) {
      int v = incidence[g][m];
      if (v != 0 && v != 1)
        throw FormatError("incidence: entry (" + std::to_string(g) + "," +
                          std::to_string(m) + ") must be 0 or 1, got " +
                          std::to_string(v));
      if (v) {
        rows_[g].set(m);
        cols_[m].set(g);
      }
    }
  }
}

std::size_t FormalContext::object_index(const std::string& id) const {
  return find_id(objects_, id, "object");
}

std::size_t FormalContext::attribute_index(const std::string& id) const {
  return find_id(attributes_, id, "attribute");
}

Bitset FormalContext::derive_intent(const Bitset& object_set) const {
  Bitset out(attributes_.size(), true);
  object_set.for_each([&](std::size_t g) { out &= rows_[g]; });
  return out;
}

Bitset FormalContext::derive_extent(const Bitset& attribute_set) const {
  Bitset out(objects_.size(), true);
  attribute_set.for_each([&](std::size_t m) { out &= cols_[m]; });
  return out;
}

Bitset FormalContext::closure_objects(const Bitset& object_set) const {
  return derive_extent(derive_intent(object_set));
}

Bitset FormalContext::closure_attributes(const Bitset& attribute_set) const {
  return derive_intent(derive_extent(attribute_set));
}

Bitset FormalContext::object_set(const std::vector<std::size_t>& indices) const {
  Bitset out(objects_.size());
  for (auto i : indices) {
    if (i >= objects_.size())
      throw ParameterError("invalid object index " + std::to_string(i) +
                           " (context has " + std::to_string(objects_.size()) +
                           " objects)");
    out.set(i);
  }
  return out;
}

Bitset FormalContext::attribute_set(const std::vector<std::size_t>& indices) const {
  Bitset out(attributes_.size());
  for (auto i : indices) {
    if (i >= attributes_.size())
      throw ParameterError("invalid attribute index " + std::to_string(i) +
                           " (context has " + std::to_string(attributes_.size()) +
                           " attributes)");
    out.set(i);
  }
  return out;
}

SoftIncidenceMatrix::SoftIncidenceMatrix(std::vector<std::string> objects,
                                         std::vector<std::string> attributes,
                                         std::vector<std::vector<double>> probabilities)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      probabilities_(std::move(probabilities)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (probabilities_.size() != objects_.size())
    throw FormatError("probabilities: expected " + std::to_string(objects_.size()) +
                      " rows, got " + std::to_string(probabilities_.size()));
  for (std::size_t g = 0; g < probabilities_.size(); ++g) {
    if (probabilities_[g].size() != attributes_.size())
      throw FormatError("probabilities: row " + std::to_string(g) +
                        " has wrong length");
    for (double p : probabilities_[g])
      if (!(p > 0.0 && p < 1.0))
        throw FormatError("probabilities must lie strictly in (0,1), got " +
                          std::to_string(p));
  }
}

FormalContext threshold_incidence(const SoftIncidenceMatrix& soft, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw ParameterError("delta must lie in (0,1), got " + std::to_string(delta));
  std::vector<std::vector<int>> incidence(soft.object_count(),
                                          std::vector<int>(soft.attribute_count(), 0));
  for (std::size_t g = 0; g < soft.object_count(); ++g)
    for (std::size_t m = 0; m < soft.attribute_count(); ++m)
      incidence[g][m] = soft.at(g, m) >= delta ? 1 : 0;
  return FormalContext(soft.objects(), soft.attributes(), incidence);
}

}  // namespace latticegeom
