#include "latticegeom/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "latticegeom/errors.hpp"

namespace latticegeom {

namespace {

// Lectic successor of the closed attribute set B, or false when exhausted.
// Ganter's NextClosure: try to add attribute i (high to low) to the prefix of
// B below i; accept the closure if it introduces no new attribute below i.
bool next_closure(const FormalContext& ctx, Bitset& b) {
  const std::size_t m = ctx.attribute_count();
  for (std::size_t ii = m; ii-- > 0;) {
    if (b.test(ii)) {
      b.reset(ii);
    } else {
      Bitset candidate = b;
      candidate.set(ii);
      Bitset closed = ctx.closure_attributes(candidate);
      if (!closed.differs_below(b, ii)) {
        b = std::move(closed);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ConceptLattice ConceptLattice::build(const FormalContext& ctx,
                                     const LatticeBuildOptions& options) {
  if (ctx.object_count() == 0 || ctx.attribute_count() == 0)
    throw ParameterError("build_lattice requires a non-empty context");

  ConceptLattice lat;
  lat.attribute_ids_ = ctx.attributes();

  Bitset intent = ctx.closure_attributes(Bitset(ctx.attribute_count()));
  while (true) {
    if (lat.concepts_.size() >= options.max_concepts)
      throw BudgetExceededError(
          options.max_concepts,
          "concept budget exceeded: more than " +
              std::to_string(options.max_concepts) +
              " concepts; raise --max-concepts to enumerate further");
    Bitset extent = ctx.derive_extent(intent);
    lat.by_extent_.emplace(extent, lat.concepts_.size());
    lat.by_intent_.emplace(intent, lat.concepts_.size());
    lat.concepts_.push_back({std::move(extent), intent});
    if (!next_closure(ctx, intent)) break;
  }

  // Extents are unique; top has all objects, bottom the fewest.
  Bitset full_objects(ctx.object_count(), true);
  lat.top_ = lat.by_extent_.at(full_objects);
  lat.bottom_ = lat.by_extent_.at(ctx.derive_extent(Bitset(ctx.attribute_count(), true)));

  lat.compute_hasse();
  return lat;
}

bool ConceptLattice::leq(std::size_t c1, std::size_t c2) const {
  return concepts_.at(c1).extent.is_subset_of(concepts_.at(c2).extent);
}

void ConceptLattice::compute_hasse() {
  const std::size_t n = concepts_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return concepts_[a].extent.count() < concepts_[b].extent.count();
  });

  // Upper covers of u: minimal proper supersets, scanned by increasing
  // extent size so every accepted cover blocks its own supersets.
  for (std::size_t u : order) {
    std::vector<std::size_t> covers;
    for (std::size_t v : order) {
      if (concepts_[v].extent.count() <= concepts_[u].extent.count()) continue;
      if (!concepts_[u].extent.is_proper_subset_of(concepts_[v].extent)) continue;
      bool dominated = false;
      for (std::size_t w : covers) {
        if (concepts_[w].extent.is_subset_of(concepts_[v].extent)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) covers.push_back(v);
    }
    for (std::size_t v : covers) hasse_.emplace_back(u, v);
  }
  std::sort(hasse_.begin(), hasse_.end());
}

std::size_t ConceptLattice::meet(std::size_t c1, std::size_t c2) const {
  Bitset extent = concepts_.at(c1).extent & concepts_.at(c2).extent;
  return index_of_extent(extent);
}

std::size_t ConceptLattice::join(std::size_t c1, std::size_t c2) const {
  Bitset intent = concepts_.at(c1).intent & concepts_.at(c2).intent;
  auto it = by_intent_.find(intent);
  if (it == by_intent_.end())
    throw ParameterError("join: resulting intent is not in the lattice");
  return it->second;
}

std::size_t ConceptLattice::index_of_extent(const Bitset& extent) const {
  auto it = by_extent_.find(extent);
  if (it == by_extent_.end())
    throw ParameterError("extent does not belong to any concept in the lattice");
  return it->second;
}

std::string ConceptLattice::to_dot() const {
  std::ostringstream out;
  out << "digraph concept_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    out << "  c" << i << " [label=\"" << concepts_[i].extent.count() << "/{";
    bool first = true;
    concepts_[i].intent.for_each([&](std::size_t m) {
      if (!first) out << ",";
      out << attribute_ids_[m];
      first = false;
    });
    out << "}\"];\n";
  }
  for (const auto& [lower, upper] : hasse_)
    out << "  c" << lower << " -> c" << upper << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latticegeom
