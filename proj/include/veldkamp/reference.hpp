#pragma once

#include <cstdint>
#include <vector>

#include "veldkamp/veldkamp.hpp"

namespace veld::ref {

// Serial reference implementations, deliberately straightforward. They are
// kept as independent oracles for the parallel kernels and are what the
// benchmark tool compares against.

// Plain single-threaded sweep; checks the hyperplane axiom by counting the
// points of every line inside the candidate.
std::vector<std::uint64_t> enumerate_hyperplanes_serial(
    const IncidenceStructure& s, int max_points = 30);

// Triple scan over the catalog: a line is any {a,b,c} whose complements XOR
// to zero. O(catalog^3).
std::vector<VeldkampLine> veldkamp_lines_serial(const HyperplaneCatalog& catalog);

}  // namespace veld::ref
