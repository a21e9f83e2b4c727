#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "veldkamp/gf2space.hpp"
#include "veldkamp/tables.hpp"

using namespace veld;

namespace {

VeldkampSpace space_for(int n) {
  return build_veldkamp_space(enumerate_hyperplanes(build_extended_dynkin_d(n)));
}

std::multiset<int> maximal_dims(const SubspaceHierarchy& h) {
  std::multiset<int> dims;
  for (int id : h.maximal)
    dims.insert(h.subspaces[static_cast<std::size_t>(id)].dimension);
  return dims;
}

const ProjectiveSubspace& maximal_of_dim(const SubspaceHierarchy& h, int dim) {
  for (int id : h.maximal)
    if (h.subspaces[static_cast<std::size_t>(id)].dimension == dim)
      return h.subspaces[static_cast<std::size_t>(id)];
  throw std::logic_error("no maximal subspace of that dimension");
}

long long lines_inside_count(const VeldkampSpace& space,
                             const std::vector<int>& members) {
  std::set<int> inside(members.begin(), members.end());
  long long count = 0;
  for (const auto& line : space.lines3)
    if (inside.contains(line.members[0]) && inside.contains(line.members[1]) &&
        inside.contains(line.members[2]))
      ++count;
  return count;
}

}  // namespace

TEST_CASE("raw search on a full rank-3 vector set yields one maximal Fano") {
  std::vector<std::uint64_t> vectors = {1, 2, 3, 4, 5, 6, 7};
  auto subs = detail::enumerate_gf2_subspaces(vectors, 1000);
  int maximal = 0;
  for (const auto& sub : subs) {
    if (!sub.maximal) continue;
    ++maximal;
    CHECK(sub.members.size() == 7);
  }
  CHECK(maximal == 1);
  // 7 lines + 1 plane
  CHECK(subs.size() == 8);
}

TEST_CASE("raw search rejects bad input") {
  CHECK_THROWS_AS(detail::enumerate_gf2_subspaces({0, 1}, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(detail::enumerate_gf2_subspaces({1, 1}, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(detail::enumerate_gf2_subspaces({1, 2, 3, 4, 5, 6, 7}, 3),
                  CapacityError);
}

TEST_CASE("n=4: a single maximal PG(3,2) omitting the degree-0 point") {
  auto space = space_for(4);
  auto hierarchy = build_subspace_hierarchy(space);
  REQUIRE(maximal_dims(hierarchy) == std::multiset<int>{3});
  const auto& pg32 = maximal_of_dim(hierarchy, 3);
  CHECK(pg32.members.size() == 15);
  CHECK(lines_inside_count(space, pg32.members) == 35);

  const int excluded =
      canonical_index_of(space.catalog, PointSet::of({0, 1, 3, 4}, 5));
  CHECK(std::find(pg32.members.begin(), pg32.members.end(), excluded) ==
        pg32.members.end());
  CHECK(space.degree[excluded] == 0);

  REQUIRE(pg32.representative.has_value());
  CHECK(space.catalog.set(*pg32.representative).to_points() == std::vector<int>{2});

  REQUIRE(hierarchy.distinguished.has_value());
  CHECK(hierarchy.subspaces[*hierarchy.distinguished].members == pg32.members);

  // The degree-0 point is on no line, hence in no plane.
  CHECK(find_fano_planes_with_points(hierarchy, {excluded}).empty());
}

TEST_CASE("n=5: PG(3,2) plus two disjoint Fano planes, each sharing one line") {
  auto space = space_for(5);
  auto hierarchy = build_subspace_hierarchy(space);
  REQUIRE(maximal_dims(hierarchy) == std::multiset<int>{3, 2, 2});

  const auto& pg32 = maximal_of_dim(hierarchy, 3);
  std::vector<const ProjectiveSubspace*> fanos;
  for (int id : hierarchy.maximal)
    if (hierarchy.subspaces[id].dimension == 2)
      fanos.push_back(&hierarchy.subspaces[id]);
  REQUIRE(fanos.size() == 2);
  CHECK(intersect(*fanos[0], *fanos[1]).empty());

  // Each Fano plane shares exactly one line with the PG(3,2), and the two
  // shared lines are the reference ones.
  const auto& fixture = tables::d5();
  auto fixture_line_masks = [&](const std::array<int, 3>& line) {
    std::set<std::uint64_t> masks;
    for (int h : line) {
      std::uint64_t m = 0;
      for (int p : fixture.hyperplanes[static_cast<std::size_t>(h - 1)])
        m |= std::uint64_t{1} << p;
      masks.insert(m);
    }
    return masks;
  };
  std::set<std::set<std::uint64_t>> expected_shared = {
      fixture_line_masks(fixture.fano1_shared_line),
      fixture_line_masks(fixture.fano2_shared_line)};

  std::set<std::set<std::uint64_t>> got_shared;
  for (const auto* fano : fanos) {
    auto lines = shared_lines(space, pg32, *fano);
    REQUIRE(lines.size() == 1);
    std::set<std::uint64_t> masks;
    for (int m : lines[0].members) masks.insert(space.catalog.set_bits(m));
    got_shared.insert(masks);
  }
  CHECK(got_shared == expected_shared);

  // The PG(3,2) is exactly the 15 hyperplanes containing {2,3}.
  REQUIRE(pg32.representative.has_value());
  CHECK(space.catalog.set(*pg32.representative).to_points() ==
        std::vector<int>{2, 3});
}

TEST_CASE("n=6: PG(4,2), two planes, and the exceptional joint line") {
  auto space = space_for(6);
  auto hierarchy = build_subspace_hierarchy(space);
  REQUIRE(maximal_dims(hierarchy) == std::multiset<int>{4, 2, 2, 1});

  const auto& pg42 = maximal_of_dim(hierarchy, 4);
  CHECK(pg42.members.size() == 31);
  CHECK(lines_inside_count(space, pg42.members) == 155);

  // Representative of the PG(4,2) is the smallest hyperplane, contained in
  // 30 others.
  REQUIRE(pg42.representative.has_value());
  CHECK(*pg42.representative == 0);
  CHECK(containment_poset(space.catalog)[0].size() == 30);

  // Distinguished PG(3,2) embedded in the PG(4,2), sharing one line with
  // each plane.
  REQUIRE(hierarchy.distinguished.has_value());
  const auto& dist = hierarchy.subspaces[*hierarchy.distinguished];
  CHECK(dist.dimension == 3);
  CHECK_FALSE(dist.maximal);
  CHECK(intersect(dist, pg42).size() == 15);
  for (int id : hierarchy.maximal) {
    const auto& sub = hierarchy.subspaces[id];
    if (sub.dimension == 2) CHECK(shared_lines(space, dist, sub).size() == 1);
  }

  // The exceptional line joins the two planes through the degree-1 point.
  const auto& joint = maximal_of_dim(hierarchy, 1);
  int degree1 = -1;
  for (int m : joint.members)
    if (space.degree[m] == 1) degree1 = m;
  REQUIRE(degree1 >= 0);
  std::vector<const ProjectiveSubspace*> fanos;
  for (int id : hierarchy.maximal)
    if (hierarchy.subspaces[id].dimension == 2)
      fanos.push_back(&hierarchy.subspaces[id]);
  int in_first = 0, in_second = 0;
  for (int m : joint.members) {
    if (m == degree1) continue;
    if (std::find(fanos[0]->members.begin(), fanos[0]->members.end(), m) !=
        fanos[0]->members.end())
      ++in_first;
    if (std::find(fanos[1]->members.begin(), fanos[1]->members.end(), m) !=
        fanos[1]->members.end())
      ++in_second;
  }
  CHECK(in_first == 1);
  CHECK(in_second == 1);
}

TEST_CASE("n=7: two PG(4,2)s meet in the distinguished PG(3,2)") {
  auto space = space_for(7);
  auto hierarchy = build_subspace_hierarchy(space);
  REQUIRE(maximal_dims(hierarchy) == std::multiset<int>{4, 4, 3, 3, 1});

  std::vector<const ProjectiveSubspace*> pg42s;
  for (int id : hierarchy.maximal)
    if (hierarchy.subspaces[id].dimension == 4)
      pg42s.push_back(&hierarchy.subspaces[id]);
  auto common = intersect(*pg42s[0], *pg42s[1]);
  CHECK(common.size() == 15);

  REQUIRE(hierarchy.distinguished.has_value());
  CHECK(hierarchy.subspaces[*hierarchy.distinguished].members == common);

  int degree1 = 0;
  for (int d : space.degree)
    if (d == 1) ++degree1;
  CHECK(degree1 == 1);

  // The two side PG(3,2)s are disjoint and each shares a Fano plane with one
  // PG(4,2) and a line with the distinguished space.
  std::vector<const ProjectiveSubspace*> sides;
  for (int id : hierarchy.maximal)
    if (hierarchy.subspaces[id].dimension == 3)
      sides.push_back(&hierarchy.subspaces[id]);
  REQUIRE(sides.size() == 2);
  CHECK(intersect(*sides[0], *sides[1]).empty());
  const auto& dist = hierarchy.subspaces[*hierarchy.distinguished];
  for (const auto* side : sides) {
    std::size_t fano_overlaps = 0;
    for (const auto* pg : pg42s)
      if (intersect(*side, *pg).size() == 7) ++fano_overlaps;
    CHECK(fano_overlaps == 1);
    CHECK(shared_lines(space, *side, dist).size() == 1);
  }
}

TEST_CASE("n=8: PG(5,2) and PG(4,2) meet in the distinguished PG(3,2)") {
  auto space = space_for(8);
  auto hierarchy = build_subspace_hierarchy(space);
  const auto& pg52 = maximal_of_dim(hierarchy, 5);
  const auto& pg42 = maximal_of_dim(hierarchy, 4);
  CHECK(pg52.members.size() == 63);
  CHECK(pg42.members.size() == 31);
  auto common = intersect(pg52, pg42);
  CHECK(common.size() == 15);
  REQUIRE(hierarchy.distinguished.has_value());
  CHECK(hierarchy.subspaces[*hierarchy.distinguished].members == common);
}

TEST_CASE("n=8: the Fano plane through the two special points") {
  auto space = space_for(8);
  auto hierarchy = build_subspace_hierarchy(space);
  auto planes = find_fano_planes_with_points(hierarchy, {41, 80});
  REQUIRE(planes.size() == 1);
  CHECK(std::find(planes[0].members.begin(), planes[0].members.end(), 100) !=
        planes[0].members.end());

  // H41 lies only in that one plane, so requiring any point outside it
  // leaves nothing.
  CHECK(find_fano_planes_with_points(hierarchy, {41, 0}).empty());

  auto pasch = pasch_from_fano(space, planes[0], 100);
  for (int p : pasch.points) CHECK(p != 100);
  for (const auto& line : pasch.lines)
    for (int m : line) CHECK(m != 100);

  CHECK_THROWS_AS(pasch_from_fano(space, planes[0], 0), std::invalid_argument);
}

TEST_CASE("pasch configuration from an abstract Fano plane") {
  // Fano plane over the path graph P7? Use the n=5 hierarchy's first plane.
  auto space = space_for(5);
  auto hierarchy = build_subspace_hierarchy(space);
  for (int id : hierarchy.maximal) {
    const auto& sub = hierarchy.subspaces[id];
    if (sub.dimension != 2) continue;
    for (int removed : sub.members) {
      auto pasch = pasch_from_fano(space, sub, removed);
      std::map<int, int> degree;
      for (const auto& line : pasch.lines)
        for (int m : line) ++degree[m];
      CHECK(degree.size() == 6);
      for (auto [point, d] : degree) {
        CHECK(d == 2);
        CHECK(point != removed);
      }
    }
  }
}

TEST_CASE("subspace law: a PG(d,2) carries (2^(d+1)-1)(2^d-1)/3 lines") {
  for (int n = 4; n <= 8; ++n) {
    auto space = space_for(n);
    auto hierarchy = build_subspace_hierarchy(space);
    for (const auto& sub : hierarchy.subspaces) {
      const long long points = (1LL << (sub.dimension + 1)) - 1;
      const long long expected = points * ((1LL << sub.dimension) - 1) / 3;
      CHECK(static_cast<long long>(sub.members.size()) == points);
      CHECK(lines_inside_count(space, sub.members) == expected);
    }
  }
}

TEST_CASE("maximal subspaces are mutually incomparable") {
  for (int n = 4; n <= 8; ++n) {
    auto space = space_for(n);
    auto maximal = maximal_subspaces(space);
    for (std::size_t i = 0; i < maximal.size(); ++i)
      for (std::size_t j = 0; j < maximal.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(std::includes(maximal[j].members.begin(),
                                  maximal[j].members.end(),
                                  maximal[i].members.begin(),
                                  maximal[i].members.end()));
      }
  }
}

TEST_CASE("representative absence is reported, not fabricated") {
  auto space = space_for(5);
  auto hierarchy = build_subspace_hierarchy(space);
  // The n=5 Fano planes have a representative ({0,1,3} and {2,4,5}); check
  // the API against a hand-made subspace without one: the PG(3,2) minus
  // nothing has H17; instead check a line whose members are incomparable.
  bool saw_absent = false;
  for (const auto& sub : hierarchy.subspaces) {
    if (sub.dimension == 1 && !sub.representative) saw_absent = true;
  }
  CHECK(saw_absent);
}
