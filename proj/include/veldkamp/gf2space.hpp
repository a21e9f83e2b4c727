#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "veldkamp/veldkamp.hpp"

namespace veld {

// A set of Veldkamp points whose hyperplane complements, together with the
// zero vector, form a GF(2)-linear subspace. Projective dimension d means
// 2^(d+1)-1 members.
struct ProjectiveSubspace {
  std::vector<int> members;  // ascending catalog indices
  int dimension = 0;
  std::optional<int> representative;  // member contained in every other member
  bool maximal = false;

  friend bool operator==(const ProjectiveSubspace& a, const ProjectiveSubspace& b) {
    return a.members == b.members;
  }
};

// Every XOR-closed subspace of dimension >= 1 present in the Veldkamp space,
// plus which of them are inclusion-maximal and which one (if any) is the
// distinguished PG(3,2).
struct SubspaceHierarchy {
  std::vector<ProjectiveSubspace> subspaces;  // deterministic order
  std::vector<int> maximal;                   // indices into `subspaces`
  std::optional<int> distinguished;           // index into `subspaces`
};

struct SubspaceOptions {
  long long max_subspaces = 2'000'000;  // guard for pathological inputs
};

// Depth-first canonical-basis search over the complement vectors. A basis is
// grown only by vectors whose whole affine layer stays inside the available
// set; canonical minimal-basis ordering makes every subspace appear exactly
// once. Parallel over first-basis-vector choices.
SubspaceHierarchy build_subspace_hierarchy(const VeldkampSpace& space,
                                           const SubspaceOptions& options = {});

// Convenience view: just the inclusion-maximal subspaces.
std::vector<ProjectiveSubspace> maximal_subspaces(const VeldkampSpace& space);

// Common members of two subspaces (XOR-closed by linearity).
std::vector<int> intersect(const ProjectiveSubspace& a, const ProjectiveSubspace& b);

// Size-three lines lying entirely inside both subspaces.
std::vector<VeldkampLine> shared_lines(const VeldkampSpace& space,
                                       const ProjectiveSubspace& a,
                                       const ProjectiveSubspace& b);

// The unique member whose point set is contained in every member's point set,
// when it exists.
std::optional<int> representative_hyperplane(const HyperplaneCatalog& catalog,
                                             const ProjectiveSubspace& sub);

// All dimension-2 subspaces (maximal or embedded) containing every required
// catalog index.
std::vector<ProjectiveSubspace> find_fano_planes_with_points(
    const SubspaceHierarchy& hierarchy, const std::vector<int>& required);

// Six points and four lines left after deleting one point of a Fano plane
// and the three lines through it; every remaining point lies on exactly two
// of the remaining lines.
struct PaschConfiguration {
  std::array<int, 6> points{};
  std::array<std::array<int, 3>, 4> lines{};
};

PaschConfiguration pasch_from_fano(const VeldkampSpace& space,
                                   const ProjectiveSubspace& plane, int removed);

// Per-Veldkamp-point diagnostics: lines3 degree plus the hierarchy subspaces
// the point belongs to (maximal ones only).
struct PointDiagnostics {
  int degree = 0;
  std::vector<int> memberships;  // indices into hierarchy.subspaces
};

std::vector<PointDiagnostics> point_diagnostics(const VeldkampSpace& space,
                                                const SubspaceHierarchy& hierarchy);

namespace detail {

// Core search on raw GF(2) vectors; exposed for tests. Returns for each
// subspace the indices (into `vectors`) of its nonzero elements, ascending,
// together with an any-extension maximality flag.
struct RawSubspace {
  std::vector<int> members;
  bool maximal = false;
};

std::vector<RawSubspace> enumerate_gf2_subspaces(
    const std::vector<std::uint64_t>& vectors, long long max_subspaces);

}  // namespace detail

}  // namespace veld
