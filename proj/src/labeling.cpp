#include "veldkamp/labeling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace veld {

namespace {

VertexLabeling make_labeling(std::string name, std::vector<std::string> strings) {
  VertexLabeling labeling;
  labeling.name = std::move(name);
  labeling.by_point.reserve(strings.size());
  for (const auto& s : strings) labeling.by_point.push_back(parse_pauli(s));
  labeling.width = labeling.by_point.front().width;
  return labeling;
}

}  // namespace

VertexLabeling builtin_labeling(int n, int variant) {
  if (variant == 1) {
    switch (n) {
      case 4: return make_labeling("builtin-d4", {"XI", "IX", "YY", "ZI", "IZ"});
      case 5:
        return make_labeling("builtin-d5", {"ZI", "XI", "YI", "IY", "IZ", "IX"});
      case 6:
        return make_labeling("builtin-d6",
                             {"ZI", "XI", "YI", "II", "IY", "IZ", "IX"});
      case 7:
        return make_labeling("builtin-d7",
                             {"ZI", "XI", "YI", "II", "II", "IY", "IZ", "IX"});
      case 8:
        return make_labeling(
            "builtin-d8",
            {"XII", "ZII", "YII", "IXI", "IYI", "IZI", "IIY", "IIX", "IIZ"});
      default: break;
    }
  } else if (variant == 2) {
    switch (n) {
      case 6:
        return make_labeling("builtin-d6-v2",
                             {"ZI", "XI", "II", "YY", "II", "IZ", "IX"});
      case 7:
        return make_labeling("builtin-d7-v2",
                             {"ZI", "XI", "II", "YI", "IY", "II", "IZ", "IX"});
      default: break;
    }
  }
  throw std::invalid_argument("no built-in labeling for n=" + std::to_string(n) +
                              " variant " + std::to_string(variant));
}

InducedLabeling induce(const VertexLabeling& labeling,
                       const HyperplaneCatalog& catalog) {
  if (static_cast<int>(labeling.by_point.size()) !=
      catalog.structure().point_count())
    throw std::invalid_argument("labeling does not cover every point");

  InducedLabeling induced;
  induced.width = labeling.width;
  induced.by_hyperplane.reserve(static_cast<std::size_t>(catalog.size()));
  for (int h = 0; h < catalog.size(); ++h) {
    PauliElement product = identity_pauli(labeling.width);
    const std::uint64_t bits = catalog.set_bits(h);
    for (int p = 0; p < catalog.structure().point_count(); ++p)
      if ((bits >> p) & 1)
        product = mul(product, labeling.by_point[static_cast<std::size_t>(p)]);
    induced.by_hyperplane.push_back(product);
  }
  return induced;
}

std::vector<int> check_line_products(const InducedLabeling& induced,
                                     const std::vector<VeldkampLine>& lines3) {
  std::vector<int> violations;
  for (int i = 0; i < static_cast<int>(lines3.size()); ++i) {
    const auto& line = lines3[static_cast<std::size_t>(i)];
    PauliElement product =
        mul(mul(induced.label(line.members[0]), induced.label(line.members[1])),
            induced.label(line.members[2]));
    if (!product.is_identity()) violations.push_back(i);
  }
  return violations;
}

bool check_bijection(const InducedLabeling& induced,
                     const std::vector<int>& members) {
  std::set<PauliElement> seen;
  for (int m : members) {
    const auto& label = induced.label(m);
    if (label.is_identity()) return false;
    if (!seen.insert(label).second) return false;
  }
  return true;
}

std::vector<std::array<PauliElement, 3>> labeled_lines_inside(
    const VeldkampSpace& space, const InducedLabeling& induced,
    const std::vector<int>& members) {
  std::unordered_set<int> inside(members.begin(), members.end());
  std::vector<std::array<PauliElement, 3>> out;
  for (const auto& line : space.lines3) {
    if (!inside.contains(line.members[0]) || !inside.contains(line.members[1]) ||
        !inside.contains(line.members[2]))
      continue;
    out.push_back({induced.label(line.members[0]), induced.label(line.members[1]),
                   induced.label(line.members[2])});
  }
  return out;
}

MerminPeresResult extract_mermin_peres(const VeldkampSpace& space,
                                       const InducedLabeling& induced,
                                       const SubspaceHierarchy& hierarchy) {
  if (!hierarchy.distinguished)
    throw std::runtime_error("no distinguished PG(3,2) in this Veldkamp space");
  const auto& dist =
      hierarchy.subspaces[static_cast<std::size_t>(*hierarchy.distinguished)];
  if (dist.dimension != 3)
    throw std::runtime_error("distinguished subspace is not a PG(3,2)");

  // Lines the distinguished space shares with subspaces that neither contain
  // it nor coincide with it.
  std::set<VeldkampLine> shared_set;
  for (int id : hierarchy.maximal) {
    const auto& other = hierarchy.subspaces[static_cast<std::size_t>(id)];
    auto common = intersect(dist, other);
    if (common.size() == dist.members.size()) continue;  // contains it
    for (const auto& line : shared_lines(space, dist, other))
      shared_set.insert(line);
  }
  if (shared_set.size() != 2)
    throw std::runtime_error("distinguished PG(3,2) does not share exactly two "
                             "lines with the other subspaces (found " +
                             std::to_string(shared_set.size()) + ")");

  MerminPeresResult result;
  {
    auto it = shared_set.begin();
    result.shared_lines[0] = *it++;
    result.shared_lines[1] = *it;
  }
  std::set<int> removed;
  for (const auto& line : result.shared_lines)
    for (int m : line.members) removed.insert(m);
  if (removed.size() != 6)
    throw std::runtime_error("the two shared lines are not disjoint");

  // Totally isotropic lines of the distinguished space: its W(3,2).
  std::vector<VeldkampLine> w_lines;
  {
    std::unordered_set<int> inside(dist.members.begin(), dist.members.end());
    for (const auto& line : space.lines3) {
      if (!inside.contains(line.members[0]) ||
          !inside.contains(line.members[1]) ||
          !inside.contains(line.members[2]))
        continue;
      const auto& a = induced.label(line.members[0]);
      const auto& b = induced.label(line.members[1]);
      const auto& c = induced.label(line.members[2]);
      if (symplectic_form(a, b) == 0 && symplectic_form(a, c) == 0 &&
          symplectic_form(b, c) == 0)
        w_lines.push_back(line);
    }
  }
  if (w_lines.size() != 15)
    throw std::runtime_error("isotropic structure of the distinguished space "
                             "is not W(3,2)");

  std::vector<int> survivors;
  for (int m : dist.members)
    if (!removed.contains(m)) survivors.push_back(m);
  if (survivors.size() != 9)
    throw std::runtime_error("expected nine points after removing the shared lines");

  std::vector<VeldkampLine> grid_lines;
  for (const auto& line : w_lines) {
    bool keep = true;
    for (int m : line.members)
      if (removed.contains(m)) keep = false;
    if (keep) grid_lines.push_back(line);
  }
  if (grid_lines.size() != 6)
    throw std::runtime_error("surviving isotropic lines do not form a grid");
  for (int p : survivors) {
    int degree = 0;
    for (const auto& line : grid_lines)
      degree += std::count(line.members.begin(), line.members.end(), p);
    if (degree != 2)
      throw std::runtime_error("grid point not on exactly two lines");
  }

  // Split the six lines into two parallel classes (rows and columns).
  auto meets = [](const VeldkampLine& a, const VeldkampLine& b) {
    for (int x : a.members)
      for (int y : b.members)
        if (x == y) return true;
    return false;
  };

  // Anchor at the survivor with the lexicographically least label; its two
  // lines seed the row and column classes.
  int anchor = survivors.front();
  for (int p : survivors)
    if (format_pauli(induced.label(p)) < format_pauli(induced.label(anchor)))
      anchor = p;

  std::vector<VeldkampLine> through_anchor;
  for (const auto& line : grid_lines)
    if (std::find(line.members.begin(), line.members.end(), anchor) !=
        line.members.end())
      through_anchor.push_back(line);
  if (through_anchor.size() != 2)
    throw std::runtime_error("anchor point not on exactly two grid lines");

  auto parallel_class = [&](const VeldkampLine& seed) {
    std::vector<VeldkampLine> cls{seed};
    for (const auto& line : grid_lines)
      if (!(line == seed) && !meets(line, seed)) cls.push_back(line);
    std::sort(cls.begin() + 1, cls.end());
    return cls;
  };
  auto rows = parallel_class(through_anchor[0]);
  auto cols = parallel_class(through_anchor[1]);
  if (rows.size() != 3 || cols.size() != 3)
    throw std::runtime_error("grid lines do not split into two parallel classes");

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int common = -1;
      for (int x : rows[static_cast<std::size_t>(i)].members)
        for (int y : cols[static_cast<std::size_t>(j)].members)
          if (x == y) common = x;
      if (common < 0)
        throw std::runtime_error("row and column do not meet in a point");
      result.grid_points[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          common;
      result.grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          induced.label(common);
    }

  result.verdict = verify_magic_square(result.grid);
  return result;
}

std::vector<ProjectiveSubspace> find_y_only_fano(const SubspaceHierarchy& hierarchy,
                                                 const InducedLabeling& induced) {
  std::vector<ProjectiveSubspace> out;
  for (int id : hierarchy.maximal) {
    const auto& sub = hierarchy.subspaces[static_cast<std::size_t>(id)];
    if (sub.dimension != 2) continue;
    bool y_only = true;
    for (int m : sub.members) {
      const auto& label = induced.label(m);
      if (label.x != label.z) {  // any X or Z letter breaks x == z
        y_only = false;
        break;
      }
    }
    if (y_only) out.push_back(sub);
  }
  return out;
}

VertexLabeling load_labeling(std::string_view text, int point_count,
                             bool allow_nonidentity,
                             std::vector<std::string>* warnings) {
  std::map<int, PauliElement> assigned;
  int width = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream in(line);
    long long vertex = -1;
    std::string pauli;
    if (!(in >> vertex)) continue;  // blank
    if (!(in >> pauli)) throw ParseError(line_no, "expected a Pauli string");
    std::string extra;
    if (in >> extra) throw ParseError(line_no, "unexpected trailing token");
    if (vertex < 0 || vertex >= point_count)
      throw ParseError(line_no, "unknown vertex " + std::to_string(vertex));
    PauliElement e;
    try {
      e = parse_pauli(pauli);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
    if (width == 0) width = e.width;
    if (e.width != width)
      throw ParseError(line_no, "Pauli string width " + std::to_string(e.width) +
                                    " differs from earlier width " +
                                    std::to_string(width));
    if (!assigned.emplace(static_cast<int>(vertex), e).second)
      throw ParseError(line_no,
                       "vertex " + std::to_string(vertex) + " labeled twice");
  }

  if (static_cast<int>(assigned.size()) != point_count)
    throw std::invalid_argument("labeling must cover all " +
                                std::to_string(point_count) + " vertices");

  VertexLabeling labeling;
  labeling.name = "file";
  labeling.width = width;
  labeling.by_point.reserve(static_cast<std::size_t>(point_count));
  for (auto& [vertex, e] : assigned) labeling.by_point.push_back(e);

  PauliElement total = identity_pauli(width);
  for (const auto& e : labeling.by_point) total = mul(total, e);
  if (!total.is_identity()) {
    const std::string message =
        "total product of vertex labels is " + format_pauli(total) +
        ", not the identity";
    if (!allow_nonidentity) throw std::invalid_argument(message);
    if (warnings) warnings->push_back(message);
  }
  return labeling;
}

}  // namespace veld
