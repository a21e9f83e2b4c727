#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "veldkamp/hyperplanes.hpp"

namespace veld {

// An unordered triple of hyperplane indices whose complements XOR to zero.
struct VeldkampLine {
  std::array<int, 3> members{};  // ascending

  friend bool operator==(const VeldkampLine&, const VeldkampLine&) = default;
  friend auto operator<=>(const VeldkampLine&, const VeldkampLine&) = default;
};

// The size-three part of the Veldkamp space of a structure: points are the
// catalog's hyperplanes, lines are the XOR-closed triples.
struct VeldkampSpace {
  HyperplaneCatalog catalog;
  std::vector<VeldkampLine> lines3;  // sorted, unique
  std::vector<int> degree;           // lines3 through each hyperplane
};

// Index of the hyperplane that completes {a,b} to a size-three Veldkamp line:
// the complement of the symmetric difference of the two point sets, when that
// set is itself a hyperplane. Throws std::invalid_argument if a == b.
std::optional<int> third_point(const HyperplaneCatalog& catalog, int a, int b);

// All size-three lines, found by closing every hyperplane pair under the
// complemented symmetric difference. OpenMP-parallel over pairs; output is
// deterministic (sorted triples).
VeldkampSpace build_veldkamp_space(HyperplaneCatalog catalog);

// Size of the complete Veldkamp line through a and b: 2 plus the number of
// other hyperplanes H with H&A == H&B == A&B. O(catalog) per call.
int full_line_size(const HyperplaneCatalog& catalog, int a, int b);

// Distribution of full_line_size over all unordered pairs. O(catalog^3).
std::map<int, long long> full_line_size_histogram(const HyperplaneCatalog& catalog);

// Triples {a,b,third} for every pair whose full Veldkamp line has exactly
// three members. Reported alongside lines3 so any divergence between the two
// notions is observable.
std::vector<VeldkampLine> full_lines_of_size3(const HyperplaneCatalog& catalog);

}  // namespace veld
