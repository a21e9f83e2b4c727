#include "veldkamp/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace veld::tables {

namespace {

std::uint64_t mask_of(const std::vector<int>& points) {
  std::uint64_t m = 0;
  for (int p : points) m |= std::uint64_t{1} << p;
  return m;
}

using MaskTriple = std::array<std::uint64_t, 3>;

MaskTriple sorted_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  MaskTriple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::set<MaskTriple> triples_from_table(
    const std::vector<std::vector<int>>& sets,
    const std::vector<std::array<int, 3>>& lines) {
  std::set<MaskTriple> out;
  for (const auto& [a, b, c] : lines)
    out.insert(sorted_triple(mask_of(sets[static_cast<std::size_t>(a - 1)]),
                             mask_of(sets[static_cast<std::size_t>(b - 1)]),
                             mask_of(sets[static_cast<std::size_t>(c - 1)])));
  return out;
}

std::set<MaskTriple> triples_from_space(const VeldkampSpace& space) {
  std::set<MaskTriple> out;
  for (const auto& line : space.lines3)
    out.insert(sorted_triple(space.catalog.set_bits(line.members[0]),
                             space.catalog.set_bits(line.members[1]),
                             space.catalog.set_bits(line.members[2])));
  return out;
}

std::string describe_triple(const MaskTriple& t, int width) {
  std::string out;
  for (std::uint64_t m : t) out += PointSet(m, width).to_string();
  return out;
}

void compare_hyperplane_sets(const std::vector<std::vector<int>>& expected,
                             const HyperplaneCatalog& catalog,
                             std::vector<std::string>& diffs) {
  std::set<std::uint64_t> want;
  for (const auto& s : expected) want.insert(mask_of(s));
  std::set<std::uint64_t> got(catalog.sets().begin(), catalog.sets().end());
  const int width = catalog.structure().point_count();
  for (std::uint64_t m : want)
    if (!got.contains(m))
      diffs.push_back("missing hyperplane " + PointSet(m, width).to_string());
  for (std::uint64_t m : got)
    if (!want.contains(m))
      diffs.push_back("unexpected hyperplane " + PointSet(m, width).to_string());
}

void compare_line_sets(const std::set<MaskTriple>& want,
                       const std::set<MaskTriple>& got, int width,
                       const std::string& what,
                       std::vector<std::string>& diffs) {
  for (const auto& t : want)
    if (!got.contains(t))
      diffs.push_back("missing " + what + " " + describe_triple(t, width));
  for (const auto& t : got)
    if (!want.contains(t))
      diffs.push_back("unexpected " + what + " " + describe_triple(t, width));
}

void compare_labels(const std::vector<std::vector<int>>& sets,
                    const std::vector<std::pair<std::string, int>>& expected,
                    const VeldkampSpace& space, const InducedLabeling& induced,
                    const std::string& what, std::vector<std::string>& diffs) {
  for (const auto& [label, h] : expected) {
    auto idx = space.catalog.find(mask_of(sets[static_cast<std::size_t>(h - 1)]));
    if (!idx) {
      diffs.push_back(what + ": H" + std::to_string(h) + " not in the catalog");
      continue;
    }
    const std::string got = format_pauli(induced.label(*idx));
    if (got != label)
      diffs.push_back(what + ": H" + std::to_string(h) + " labeled " + got +
                      ", expected " + label);
  }
}

}  // namespace

const D4Tables& d4() {
  static const D4Tables t = [] {
    D4Tables t;
    t.hyperplanes = {
        {0, 2},          {1, 2},          {2, 4},       {2, 3},
        {1, 2, 3, 4},    {0, 2, 3, 4},    {0, 1, 2, 3}, {0, 1, 2, 4},
        {0, 2, 3},       {0, 2, 4},       {0, 1, 2},    {2, 3, 4},
        {1, 2, 3},       {1, 2, 4},       {2},          {0, 1, 3, 4},
    };
    t.lines = {
        {1, 2, 12},  {1, 3, 13},  {1, 4, 14},   {1, 5, 15},   {1, 6, 11},
        {1, 7, 10},  {1, 8, 9},   {2, 3, 9},    {2, 4, 10},   {2, 5, 11},
        {2, 6, 15},  {2, 7, 14},  {2, 8, 13},   {3, 4, 11},   {3, 5, 10},
        {3, 6, 14},  {3, 7, 15},  {3, 8, 12},   {4, 5, 9},    {4, 6, 13},
        {4, 7, 12},  {4, 8, 15},  {5, 6, 12},   {5, 7, 13},   {5, 8, 14},
        {6, 7, 9},   {6, 8, 10},  {7, 8, 11},   {9, 10, 11},  {9, 12, 13},
        {9, 14, 15}, {10, 12, 14}, {10, 13, 15}, {11, 12, 15}, {11, 13, 14},
    };
    t.labels = {"ZY", "YZ", "YX", "XY", "XI", "IX", "IZ", "ZI",
                "IY", "ZX", "ZZ", "XX", "XZ", "YI", "YY", "YY"};
    return t;
  }();
  return t;
}

const D5Tables& d5() {
  static const D5Tables t = [] {
    D5Tables t;
    t.hyperplanes = {
        {0, 1, 3},          {0, 1, 3, 4},       {0, 1, 3, 5},
        {0, 1, 3, 4, 5},    {2, 4, 5},          {0, 2, 4, 5},
        {1, 2, 4, 5},       {0, 1, 2, 4, 5},    {0, 2, 3},
        {2, 3, 4},          {1, 2, 3},          {2, 3, 5},
        {1, 2, 3, 4, 5},    {0, 1, 2, 3, 5},    {0, 2, 3, 4, 5},
        {0, 1, 2, 3, 4},    {2, 3},             {0, 2, 3, 4},
        {1, 2, 3, 5},       {0, 1, 2, 3},       {2, 3, 4, 5},
        {0, 2, 3, 5},       {1, 2, 3, 4},
    };
    t.double_six = {
        {1, 2, 14}, {1, 3, 16}, {1, 4, 20}, {2, 3, 20}, {2, 4, 16}, {3, 4, 14},
        {5, 6, 13}, {5, 7, 15}, {5, 8, 21}, {6, 7, 21}, {6, 8, 15}, {7, 8, 13},
    };
    t.pg_lines = {
        {9, 10, 19},  {9, 11, 21},  {9, 12, 23},  {9, 13, 17},  {9, 14, 18},
        {9, 15, 20},  {9, 16, 22},  {10, 11, 22}, {10, 12, 20}, {10, 13, 18},
        {10, 14, 17}, {10, 15, 23}, {10, 16, 21}, {11, 12, 18}, {11, 13, 20},
        {11, 14, 23}, {11, 15, 17}, {11, 16, 19}, {12, 13, 22}, {12, 14, 21},
        {12, 15, 19}, {12, 16, 17}, {13, 14, 19}, {13, 15, 21}, {13, 16, 23},
        {14, 15, 22}, {14, 16, 20}, {15, 16, 18}, {17, 18, 19}, {17, 20, 21},
        {17, 22, 23}, {18, 20, 22}, {18, 21, 23}, {19, 20, 23}, {19, 21, 22},
    };
    t.pg_labels = {
        {"XY", 9},  {"YX", 10}, {"ZY", 11}, {"YZ", 12}, {"ZI", 13},
        {"IZ", 14}, {"XI", 15}, {"IX", 16}, {"YY", 17}, {"XX", 18},
        {"ZZ", 19}, {"IY", 20}, {"YI", 21}, {"XZ", 22}, {"ZX", 23},
    };
    t.fano1_labels = {{"YX", 2}, {"YZ", 3}, {"YY", 1}, {"YI", 4}};
    t.fano2_labels = {{"XY", 6}, {"ZY", 7}, {"YY", 5}, {"IY", 8}};
    t.fano1_members = {1, 2, 3, 4, 14, 16, 20};
    t.fano2_members = {5, 6, 7, 8, 13, 15, 21};
    t.fano1_shared_line = {14, 16, 20};
    t.fano2_shared_line = {13, 15, 21};
    return t;
  }();
  return t;
}

std::vector<std::string> compare_d4(const VeldkampSpace& space,
                                    const InducedLabeling& induced) {
  const auto& fixture = d4();
  std::vector<std::string> diffs;
  const int width = space.catalog.structure().point_count();

  compare_hyperplane_sets(fixture.hyperplanes, space.catalog, diffs);
  compare_line_sets(triples_from_table(fixture.hyperplanes, fixture.lines),
                    triples_from_space(space), width, "line", diffs);

  for (int h = 1; h <= 16; ++h) {
    auto idx = space.catalog.find(
        mask_of(fixture.hyperplanes[static_cast<std::size_t>(h - 1)]));
    if (!idx) continue;  // already reported as missing
    const std::string got = format_pauli(induced.label(*idx));
    if (got != fixture.labels[static_cast<std::size_t>(h - 1)])
      diffs.push_back("H" + std::to_string(h) + " labeled " + got +
                      ", expected " + fixture.labels[static_cast<std::size_t>(h - 1)]);
  }
  return diffs;
}

std::vector<std::string> compare_d5(const VeldkampSpace& space,
                                    const SubspaceHierarchy& hierarchy,
                                    const InducedLabeling& induced) {
  const auto& fixture = d5();
  std::vector<std::string> diffs;
  const int width = space.catalog.structure().point_count();

  compare_hyperplane_sets(fixture.hyperplanes, space.catalog, diffs);

  auto want = triples_from_table(fixture.hyperplanes, fixture.double_six);
  for (const auto& t :
       triples_from_table(fixture.hyperplanes, fixture.pg_lines))
    want.insert(t);
  compare_line_sets(want, triples_from_space(space), width, "line", diffs);

  compare_labels(fixture.hyperplanes, fixture.pg_labels, space, induced,
                 "PG(3,2)", diffs);
  compare_labels(fixture.hyperplanes, fixture.fano1_labels, space, induced,
                 "first Fano plane", diffs);
  compare_labels(fixture.hyperplanes, fixture.fano2_labels, space, induced,
                 "second Fano plane", diffs);

  // Fano plane composition and the lines they share with the PG(3,2).
  auto expected_members = [&](const std::vector<int>& hs) {
    std::set<std::uint64_t> masks;
    for (int h : hs)
      masks.insert(mask_of(fixture.hyperplanes[static_cast<std::size_t>(h - 1)]));
    return masks;
  };
  std::vector<std::set<std::uint64_t>> want_fanos = {
      expected_members(fixture.fano1_members),
      expected_members(fixture.fano2_members)};
  std::vector<std::set<std::uint64_t>> got_fanos;
  for (int id : hierarchy.maximal) {
    const auto& sub = hierarchy.subspaces[static_cast<std::size_t>(id)];
    if (sub.dimension != 2) continue;
    std::set<std::uint64_t> masks;
    for (int m : sub.members) masks.insert(space.catalog.set_bits(m));
    got_fanos.push_back(std::move(masks));
  }
  for (const auto& f : want_fanos)
    if (std::find(got_fanos.begin(), got_fanos.end(), f) == got_fanos.end())
      diffs.push_back("expected Fano plane not found among maximal subspaces");
  if (got_fanos.size() != want_fanos.size())
    diffs.push_back("expected exactly two maximal Fano planes, found " +
                    std::to_string(got_fanos.size()));

  if (hierarchy.distinguished) {
    const auto& dist =
        hierarchy.subspaces[static_cast<std::size_t>(*hierarchy.distinguished)];
    std::set<MaskTriple> want_shared;
    auto add_shared = [&](const std::array<int, 3>& line) {
      want_shared.insert(sorted_triple(
          mask_of(fixture.hyperplanes[static_cast<std::size_t>(line[0] - 1)]),
          mask_of(fixture.hyperplanes[static_cast<std::size_t>(line[1] - 1)]),
          mask_of(fixture.hyperplanes[static_cast<std::size_t>(line[2] - 1)])));
    };
    add_shared(fixture.fano1_shared_line);
    add_shared(fixture.fano2_shared_line);

    std::set<MaskTriple> got_shared;
    for (int id : hierarchy.maximal) {
      const auto& sub = hierarchy.subspaces[static_cast<std::size_t>(id)];
      if (sub.dimension != 2) continue;
      for (const auto& line : shared_lines(space, dist, sub))
        got_shared.insert(sorted_triple(space.catalog.set_bits(line.members[0]),
                                        space.catalog.set_bits(line.members[1]),
                                        space.catalog.set_bits(line.members[2])));
    }
    compare_line_sets(want_shared, got_shared, width, "shared line", diffs);
  } else {
    diffs.push_back("no distinguished PG(3,2) was identified");
  }
  return diffs;
}

}  // namespace veld::tables
