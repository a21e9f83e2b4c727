#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "veldkamp/incidence.hpp"

namespace veld {

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True iff `candidate` is a geometric hyperplane of `s`: a proper subset of
// the points such that every line has one or two of its points inside.
bool is_hyperplane(const IncidenceStructure& s, const PointSet& candidate);

// Catalog order: fewer points first; ties broken by lexicographic comparison
// of the ascending point lists. Equivalent bit trick: the set containing the
// lowest differing point precedes.
bool canonical_less(std::uint64_t a, std::uint64_t b);

struct Hyperplane {
  PointSet points;
  int index = -1;
};

// All geometric hyperplanes of a structure, canonically ordered and indexed
// from 0. Immutable after construction.
class HyperplaneCatalog {
 public:
  HyperplaneCatalog(IncidenceStructure structure,
                    std::vector<std::uint64_t> sorted_sets);

  const IncidenceStructure& structure() const { return structure_; }
  int size() const { return static_cast<int>(sets_.size()); }
  std::uint64_t set_bits(int index) const { return sets_.at(static_cast<std::size_t>(index)); }
  PointSet set(int index) const {
    return PointSet(set_bits(index), structure_.point_count());
  }
  Hyperplane hyperplane(int index) const { return {set(index), index}; }
  const std::vector<std::uint64_t>& sets() const { return sets_; }

  // Complement of the hyperplane's point set, the GF(2) coordinate used by
  // the Veldkamp-line and subspace machinery.
  std::uint64_t complement_bits(int index) const {
    return structure_.full_mask() & ~set_bits(index);
  }

  std::optional<int> find(std::uint64_t bits) const;

 private:
  IncidenceStructure structure_;
  std::vector<std::uint64_t> sets_;
  std::unordered_map<std::uint64_t, int> index_of_;
};

struct EnumerateOptions {
  int max_points = 30;   // refuse structures larger than this
  int chunk_size = 1 << 14;  // parallel sweep granularity; any value, same result
};

// Exhaustive sweep over all 2^P subsets, OpenMP-parallel over chunks.
// Deterministic: the catalog is canonically sorted regardless of chunking or
// thread count. Throws CapacityError above options.max_points.
HyperplaneCatalog enumerate_hyperplanes(const IncidenceStructure& s,
                                        const EnumerateOptions& options = {});

// Canonical index of a point set known to be in the catalog; throws
// std::out_of_range otherwise.
int canonical_index_of(const HyperplaneCatalog& catalog, const PointSet& points);

// For each hyperplane, the ascending list of other hyperplanes whose point
// sets properly contain it.
std::vector<std::vector<int>> containment_poset(const HyperplaneCatalog& catalog);

}  // namespace veld
