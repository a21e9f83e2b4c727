#include "veldkamp/hyperplanes.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace veld {

bool is_hyperplane(const IncidenceStructure& s, const PointSet& candidate) {
  if (candidate.width != s.point_count())
    throw std::invalid_argument("candidate width does not match the structure");
  const std::uint64_t bits = candidate.bits & s.full_mask();
  if (bits == s.full_mask()) return false;  // not a proper subset
  for (std::uint64_t line : s.line_masks()) {
    int inside = std::popcount(bits & line);
    if (inside != 1 && inside != 2) return false;
  }
  return true;
}

bool canonical_less(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  std::uint64_t lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

HyperplaneCatalog::HyperplaneCatalog(IncidenceStructure structure,
                                     std::vector<std::uint64_t> sorted_sets)
    : structure_(std::move(structure)), sets_(std::move(sorted_sets)) {
  index_of_.reserve(sets_.size() * 2);
  for (int i = 0; i < static_cast<int>(sets_.size()); ++i)
    index_of_.emplace(sets_[static_cast<std::size_t>(i)], i);
}

std::optional<int> HyperplaneCatalog::find(std::uint64_t bits) const {
  auto it = index_of_.find(bits);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

HyperplaneCatalog enumerate_hyperplanes(const IncidenceStructure& s,
                                        const EnumerateOptions& options) {
  const int points = s.point_count();
  if (points > options.max_points)
    throw CapacityError("structure has " + std::to_string(points) +
                        " points, above the enumeration cap of " +
                        std::to_string(options.max_points));

  const std::uint64_t full = s.full_mask();
  const auto& lines = s.line_masks();
  const std::uint64_t total = std::uint64_t{1} << points;
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(options.chunk_size));
  const std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);

  std::vector<std::vector<std::uint64_t>> found(
      static_cast<std::size_t>(chunks));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t c = 0; c < chunks; ++c) {
    auto& local = found[static_cast<std::size_t>(c)];
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (mask == full) continue;
      bool ok = true;
      for (std::uint64_t line : lines) {
        if ((mask & line) == 0) {  // a line with no point inside kills it
          ok = false;
          break;
        }
      }
      if (ok) local.push_back(mask);
    }
  }

  std::vector<std::uint64_t> sets;
  for (auto& local : found)
    sets.insert(sets.end(), local.begin(), local.end());
  std::sort(sets.begin(), sets.end(), canonical_less);

  return HyperplaneCatalog(s, std::move(sets));
}

int canonical_index_of(const HyperplaneCatalog& catalog, const PointSet& points) {
  if (points.width != catalog.structure().point_count())
    throw std::invalid_argument("point set width does not match the catalog");
  auto idx = catalog.find(points.bits);
  if (!idx)
    throw std::out_of_range("point set " + points.to_string() +
                            " is not a hyperplane of this structure");
  return *idx;
}

std::vector<std::vector<int>> containment_poset(const HyperplaneCatalog& catalog) {
  const int n = catalog.size();
  std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t a = catalog.set_bits(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::uint64_t b = catalog.set_bits(j);
      if ((a & ~b) == 0 && a != b) above[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return above;
}

}  // namespace veld
