#pragma once

// Formal contexts and their Galois derivations. A context is immutable after
// construction and safe to share across threads.

#include <string>
#include <vector>

#include "latticegeom/bitset.hpp"

namespace latticegeom {

class FormalContext {
 public:
  // incidence is |objects| x |attributes|, entries 0/1, rows ordered as
  // `objects`. Throws FormatError on duplicate ids, dimension mismatch or
  // non-binary entries.
  FormalContext(std::vector<std::string> objects,
                std::vector<std::string> attributes,
                const std::vector<std::vector<int>>& incidence);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  std::size_t object_index(const std::string& id) const;     // FormatError if unknown
  std::size_t attribute_index(const std::string& id) const;  // FormatError if unknown

  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  // attributes of object g
  const Bitset& row(std::size_t g) const { return rows_[g]; }
  // objects carrying attribute m
  const Bitset& column(std::size_t m) const { return cols_[m]; }

  // A' : attributes common to every object in A. A empty -> all of M.
  Bitset derive_intent(const Bitset& object_set) const;
  // B' : objects carrying every attribute in B. B empty -> all of G.
  Bitset derive_extent(const Bitset& attribute_set) const;
  // A'' and B''
  Bitset closure_objects(const Bitset& object_set) const;
  Bitset closure_attributes(const Bitset& attribute_set) const;

  // Index-list conveniences; throw ParameterError on out-of-range indices.
  Bitset object_set(const std::vector<std::size_t>& indices) const;
  Bitset attribute_set(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
};

// Soft incidence probabilities; every entry must lie strictly in (0,1).
class SoftIncidenceMatrix {
 public:
  SoftIncidenceMatrix(std::vector<std::string> objects,
                      std::vector<std::string> attributes,
                      std::vector<std::vector<double>> probabilities);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  double at(std::size_t g, std::size_t m) const { return probabilities_[g][m]; }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<double>> probabilities_;
};

// I_delta: (g,m) incident iff P(m(g)=1) >= delta. delta must be in (0,1);
// the boundary P == delta counts as incident.
FormalContext threshold_incidence(const SoftIncidenceMatrix& soft, double delta);

}  // namespace latticegeom
