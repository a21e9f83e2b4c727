#include "veldkamp/reference.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace veld::ref {

std::vector<std::uint64_t> enumerate_hyperplanes_serial(
    const IncidenceStructure& s, int max_points) {
  if (s.point_count() > max_points)
    throw CapacityError("structure has " + std::to_string(s.point_count()) +
                        " points, above the enumeration cap of " +
                        std::to_string(max_points));
  const std::uint64_t full = s.full_mask();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (mask == full) continue;
    bool ok = true;
    for (std::uint64_t line : s.line_masks()) {
      const int inside = std::popcount(mask & line);
      if (inside != 1 && inside != 2) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<VeldkampLine> veldkamp_lines_serial(const HyperplaneCatalog& catalog) {
  const int n = catalog.size();
  std::vector<VeldkampLine> out;
  for (int a = 0; a < n; ++a) {
    const std::uint64_t ca = catalog.complement_bits(a);
    for (int b = a + 1; b < n; ++b) {
      const std::uint64_t cb = catalog.complement_bits(b);
      for (int c = b + 1; c < n; ++c) {
        if ((ca ^ cb ^ catalog.complement_bits(c)) == 0)
          out.push_back(VeldkampLine{{a, b, c}});
      }
    }
  }
  return out;
}

}  // namespace veld::ref
