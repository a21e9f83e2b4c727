#pragma once

#include <array>
#include <string>
#include <vector>

#include "veldkamp/gf2space.hpp"
#include "veldkamp/labeling.hpp"

namespace veld::tables {

// Reference catalogs for the two smallest extended D diagrams, with the
// hyperplane numbering the reference tables use (1-based). The comparators
// match computed results setwise against these, so they are independent of
// the canonical 0-based order the library assigns.

struct D4Tables {
  std::vector<std::vector<int>> hyperplanes;       // H1..H16 point sets
  std::vector<std::array<int, 3>> lines;           // 35 triples, 1-based
  std::vector<std::string> labels;                 // induced labels H1..H16
};

struct D5Tables {
  std::vector<std::vector<int>> hyperplanes;       // H1..H23 point sets
  std::vector<std::array<int, 3>> double_six;      // 12 triples, 1-based
  std::vector<std::array<int, 3>> pg_lines;        // 35 triples, 1-based
  std::vector<std::pair<std::string, int>> pg_labels;  // element -> H index
  std::vector<std::pair<std::string, int>> fano1_labels;
  std::vector<std::pair<std::string, int>> fano2_labels;
  std::vector<int> fano1_members;                  // 1-based H indices
  std::vector<int> fano2_members;
  std::array<int, 3> fano1_shared_line;            // line shared with the PG(3,2)
  std::array<int, 3> fano2_shared_line;
};

const D4Tables& d4();
const D5Tables& d5();

// Empty result means full agreement; otherwise one human-readable line per
// discrepancy.
std::vector<std::string> compare_d4(const VeldkampSpace& space,
                                    const InducedLabeling& induced);
std::vector<std::string> compare_d5(const VeldkampSpace& space,
                                    const SubspaceHierarchy& hierarchy,
                                    const InducedLabeling& induced);

}  // namespace veld::tables
