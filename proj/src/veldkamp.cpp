#include "veldkamp/veldkamp.hpp"

#include <algorithm>
#include <stdexcept>

namespace veld {

std::optional<int> third_point(const HyperplaneCatalog& catalog, int a, int b) {
  if (a == b) throw std::invalid_argument("third_point requires two distinct hyperplanes");
  const std::uint64_t full = catalog.structure().full_mask();
  const std::uint64_t sym_diff = catalog.set_bits(a) ^ catalog.set_bits(b);
  return catalog.find(full & ~sym_diff);
}

VeldkampSpace build_veldkamp_space(HyperplaneCatalog catalog) {
  const int n = catalog.size();
  const std::uint64_t full = catalog.structure().full_mask();

  std::vector<std::vector<VeldkampLine>> found(static_cast<std::size_t>(n));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int a = 0; a < n; ++a) {
    auto& local = found[static_cast<std::size_t>(a)];
    const std::uint64_t set_a = catalog.set_bits(a);
    for (int b = a + 1; b < n; ++b) {
      const std::uint64_t set_b = catalog.set_bits(b);
      auto c = catalog.find(full & ~(set_a ^ set_b));
      if (!c || *c <= b) continue;  // keep the instance where a,b are smallest
      const std::uint64_t set_c = catalog.set_bits(*c);
      // Equal pairwise intersections follow from the XOR identity; keep the
      // check as a cheap runtime certificate.
      const std::uint64_t ab = set_a & set_b;
      if ((set_a & set_c) != ab || (set_b & set_c) != ab)
        throw std::logic_error("veldkamp line with unequal pairwise intersections");
      local.push_back(VeldkampLine{{a, b, *c}});
    }
  }

  VeldkampSpace space{std::move(catalog), {}, {}};
  for (auto& local : found)
    space.lines3.insert(space.lines3.end(), local.begin(), local.end());
  std::sort(space.lines3.begin(), space.lines3.end());

  space.degree.assign(static_cast<std::size_t>(n), 0);
  for (const auto& line : space.lines3)
    for (int m : line.members) ++space.degree[static_cast<std::size_t>(m)];
  return space;
}

int full_line_size(const HyperplaneCatalog& catalog, int a, int b) {
  if (a == b) throw std::invalid_argument("full_line_size requires two distinct hyperplanes");
  const std::uint64_t set_a = catalog.set_bits(a);
  const std::uint64_t set_b = catalog.set_bits(b);
  const std::uint64_t ab = set_a & set_b;
  int size = 2;
  for (int h = 0; h < catalog.size(); ++h) {
    if (h == a || h == b) continue;
    const std::uint64_t set_h = catalog.set_bits(h);
    if ((set_h & set_a) == ab && (set_h & set_b) == ab) ++size;
  }
  return size;
}

std::map<int, long long> full_line_size_histogram(const HyperplaneCatalog& catalog) {
  std::map<int, long long> histogram;
  const int n = catalog.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) ++histogram[full_line_size(catalog, a, b)];
  return histogram;
}

std::vector<VeldkampLine> full_lines_of_size3(const HyperplaneCatalog& catalog) {
  std::vector<VeldkampLine> out;
  const int n = catalog.size();
  for (int a = 0; a < n; ++a) {
    const std::uint64_t set_a = catalog.set_bits(a);
    for (int b = a + 1; b < n; ++b) {
      if (full_line_size(catalog, a, b) != 3) continue;
      const std::uint64_t set_b = catalog.set_bits(b);
      const std::uint64_t ab = set_a & set_b;
      // The third member is the unique other hyperplane with equal
      // intersections, whatever its relation to the XOR construction.
      for (int h = 0; h < n; ++h) {
        if (h == a || h == b) continue;
        const std::uint64_t set_h = catalog.set_bits(h);
        if ((set_h & set_a) == ab && (set_h & set_b) == ab) {
          if (h > b) {
            std::array<int, 3> members{a, b, h};
            out.push_back(VeldkampLine{members});
          }
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace veld
