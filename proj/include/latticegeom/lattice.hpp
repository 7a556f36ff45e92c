#pragma once

// Concept lattice construction. Enumeration is NextClosure over attribute
// sets, so concepts come out in lectic intent order, duplicate-free, and the
// whole walk is bounded by a caller-supplied concept budget.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latticegeom/bitset.hpp"
#include "latticegeom/context.hpp"

namespace latticegeom {

struct FormalConcept {
  Bitset extent;  // A, object indices
  Bitset intent;  // B, attribute indices
};

struct LatticeBuildOptions {
  std::size_t max_concepts = 100000;
};

class ConceptLattice {
 public:
  // Throws ParameterError on an empty carrier set and BudgetExceededError
  // when more than options.max_concepts closed pairs exist.
  static ConceptLattice build(const FormalContext& ctx,
                              const LatticeBuildOptions& options = {});

  std::size_t size() const { return concepts_.size(); }
  const std::vector<FormalConcept>& concepts() const { return concepts_; }
  const FormalConcept& concept_at(std::size_t i) const { return concepts_.at(i); }

  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  // c1 <= c2 under extent inclusion.
  bool leq(std::size_t c1, std::size_t c2) const;

  // Covering relation, pairs (lower, upper), deterministically ordered.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const {
    return hasse_;
  }

  // Greatest lower bound / least upper bound; both are lattice members.
  std::size_t meet(std::size_t c1, std::size_t c2) const;
  std::size_t join(std::size_t c1, std::size_t c2) const;

  std::size_t index_of_extent(const Bitset& extent) const;  // ParameterError if absent

  // Graphviz rendering: one node per concept labeled "extent-size/intent",
  // Hasse edges drawn child -> parent, nodes in canonical order.
  std::string to_dot() const;

 private:
  std::vector<FormalConcept> concepts_;
  std::vector<std::string> attribute_ids_;  // for DOT labels
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> by_extent_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> by_intent_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;

  void compute_hasse();
};

}  // namespace latticegeom
