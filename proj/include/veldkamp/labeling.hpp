#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veldkamp/gf2space.hpp"
#include "veldkamp/pauli.hpp"

namespace veld {

// A total assignment of Pauli elements to the points of a structure. The
// built-ins multiply to the identity over all vertices, which is what makes
// every induced Veldkamp-line product close to the identity.
struct VertexLabeling {
  std::string name;
  int width = 0;
  std::vector<PauliElement> by_point;
};

// Labels induced on hyperplanes: the phase-free product over the hyperplane's
// points (XOR, so the order of the points is immaterial).
struct InducedLabeling {
  int width = 0;
  std::vector<PauliElement> by_hyperplane;

  const PauliElement& label(int hyperplane_index) const {
    return by_hyperplane.at(static_cast<std::size_t>(hyperplane_index));
  }
};

// The vertex labelings used for the extended D diagrams, n in 4..8.
// Variant 2 exists only for n = 6 and n = 7.
VertexLabeling builtin_labeling(int n, int variant = 1);

InducedLabeling induce(const VertexLabeling& labeling,
                       const HyperplaneCatalog& catalog);

// Indices of lines whose three induced labels do not multiply to identity.
std::vector<int> check_line_products(const InducedLabeling& induced,
                                     const std::vector<VeldkampLine>& lines3);

// True iff the member labels are pairwise distinct and none is the identity.
bool check_bijection(const InducedLabeling& induced,
                     const std::vector<int>& members);

// The label triples of the size-three lines lying inside a member set.
std::vector<std::array<PauliElement, 3>> labeled_lines_inside(
    const VeldkampSpace& space, const InducedLabeling& induced,
    const std::vector<int>& members);

// Mermin-Peres extraction: remove the two lines the distinguished PG(3,2)
// shares with other subspaces, certify the nine remaining points with their
// six isotropic lines as a 3x3 grid, and evaluate the context signs.
struct MerminPeresResult {
  std::array<std::array<int, 3>, 3> grid_points{};  // catalog indices
  std::array<std::array<PauliElement, 3>, 3> grid{};
  std::array<VeldkampLine, 2> shared_lines{};
  MagicSquareReport verdict;
};

MerminPeresResult extract_mermin_peres(const VeldkampSpace& space,
                                       const InducedLabeling& induced,
                                       const SubspaceHierarchy& hierarchy);

// Maximal dimension-2 subspaces whose seven member labels use only the
// letters I and Y (i.e. x == z on every member). Embedded planes inside
// larger subspaces can carry the same label alphabet and are not reported;
// see find_fano_planes_with_points for seeded embedded queries.
std::vector<ProjectiveSubspace> find_y_only_fano(const SubspaceHierarchy& hierarchy,
                                                 const InducedLabeling& induced);

// Labeling file format: one "vertex PAULI_STRING" pair per line, '#' comments,
// all strings of equal width. The total product must be the identity unless
// allow_nonidentity is set, in which case a warning is emitted instead.
VertexLabeling load_labeling(std::string_view text, int point_count,
                             bool allow_nonidentity = false,
                             std::vector<std::string>* warnings = nullptr);

}  // namespace veld
