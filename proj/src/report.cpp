#include "veldkamp/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace veld {

namespace {

using json = nlohmann::ordered_json;

long long induced_line_count(const VeldkampSpace& space,
                             const std::vector<int>& members) {
  std::set<int> inside(members.begin(), members.end());
  long long count = 0;
  for (const auto& line : space.lines3)
    if (inside.contains(line.members[0]) && inside.contains(line.members[1]) &&
        inside.contains(line.members[2]))
      ++count;
  return count;
}

// Subspaces shown in reports and DOT output: the maximal ones plus the
// distinguished PG(3,2) when it is embedded, ordered by descending dimension.
std::vector<int> listed_subspaces(const SubspaceHierarchy& hierarchy) {
  std::vector<int> ids = hierarchy.maximal;
  if (hierarchy.distinguished &&
      std::find(ids.begin(), ids.end(), *hierarchy.distinguished) == ids.end())
    ids.push_back(*hierarchy.distinguished);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const auto& sa = hierarchy.subspaces[static_cast<std::size_t>(a)];
    const auto& sb = hierarchy.subspaces[static_cast<std::size_t>(b)];
    if (sa.dimension != sb.dimension) return sa.dimension > sb.dimension;
    return sa.members < sb.members;
  });
  return ids;
}

std::optional<int> top_subspace(const SubspaceHierarchy& hierarchy) {
  std::optional<int> best;
  for (int id : hierarchy.maximal) {
    if (!best || hierarchy.subspaces[static_cast<std::size_t>(id)].dimension >
                     hierarchy.subspaces[static_cast<std::size_t>(*best)].dimension)
      best = id;
  }
  return best;
}

LabelingReport run_labeling_suite(const VertexLabeling& labeling,
                                  const VeldkampSpace& space,
                                  const SubspaceHierarchy& hierarchy,
                                  const std::vector<PointDiagnostics>& diagnostics) {
  LabelingReport report;
  report.labeling = labeling;
  report.induced = induce(labeling, space.catalog);
  report.line_product_violations =
      check_line_products(report.induced, space.lines3);

  if (auto top = top_subspace(hierarchy))
    report.bijection_on_top = check_bijection(
        report.induced, hierarchy.subspaces[static_cast<std::size_t>(*top)].members);

  if (hierarchy.distinguished) {
    const auto& dist =
        hierarchy.subspaces[static_cast<std::size_t>(*hierarchy.distinguished)];
    report.bijection_on_distinguished =
        check_bijection(report.induced, dist.members);

    auto labeled = labeled_lines_inside(space, report.induced, dist.members);
    auto isotropic = isotropic_lines(labeled);
    report.isotropic_line_count = static_cast<int>(isotropic.size());
    std::vector<PauliElement> points;
    points.reserve(dist.members.size());
    for (int m : dist.members) points.push_back(report.induced.label(m));
    std::vector<std::array<PauliElement, 3>> w_lines;
    for (int i : isotropic) w_lines.push_back(labeled[static_cast<std::size_t>(i)]);
    try {
      report.gq22 = check_gq22(points, w_lines);
    } catch (const std::invalid_argument&) {
      report.gq22 = false;
    }

    std::vector<PauliElement> members_labels = points;
    report.distinguished_subgroup = check_subgroup(members_labels);
  }

  try {
    report.mermin_peres = extract_mermin_peres(space, report.induced, hierarchy);
  } catch (const std::runtime_error& err) {
    report.mermin_peres_error = err.what();
  }

  report.y_only_fanos = find_y_only_fano(hierarchy, report.induced);
  if (report.y_only_fanos.size() == 1) {
    // The plane's own members that belong to no other maximal subspace are
    // its exceptional points; removing the third point of their common line
    // leaves the Pasch configuration.
    const auto& plane = report.y_only_fanos.front();
    std::optional<int> plane_id;
    for (int id : hierarchy.maximal)
      if (hierarchy.subspaces[static_cast<std::size_t>(id)].members ==
          plane.members)
        plane_id = id;
    std::vector<int> exceptional_members;
    for (int m : plane.members) {
      bool elsewhere = false;
      for (int id : diagnostics[static_cast<std::size_t>(m)].memberships)
        if (!plane_id || id != *plane_id) elsewhere = true;
      if (!elsewhere) exceptional_members.push_back(m);
    }
    if (exceptional_members.size() == 2) {
      for (const auto& line : space.lines3) {
        const auto& m = line.members;
        const bool has_both =
            std::find(m.begin(), m.end(), exceptional_members[0]) != m.end() &&
            std::find(m.begin(), m.end(), exceptional_members[1]) != m.end();
        if (!has_both) continue;
        int third = -1;
        for (int x : m)
          if (x != exceptional_members[0] && x != exceptional_members[1])
            third = x;
        try {
          report.pasch = pasch_from_fano(space, plane, third);
        } catch (const std::exception&) {
        }
        break;
      }
    }
  }
  return report;
}

json point_set_json(const HyperplaneCatalog& catalog, int index) {
  return json(catalog.set(index).to_points());
}

json line_json(const VeldkampLine& line) {
  return json{line.members[0], line.members[1], line.members[2]};
}

}  // namespace

AnalysisReport build_analysis(const IncidenceStructure& structure,
                              const AnalysisOptions& options) {
  AnalysisReport report{
      build_veldkamp_space(enumerate_hyperplanes(structure, options.enumerate)),
      {}, {}, {}, {}, {}, {}};
  report.hierarchy = build_subspace_hierarchy(report.space);
  report.diagnostics = point_diagnostics(report.space, report.hierarchy);

  for (int p = 0; p < report.space.catalog.size(); ++p) {
    int best_dim = -1;
    for (int id : report.diagnostics[static_cast<std::size_t>(p)].memberships)
      best_dim = std::max(
          best_dim,
          report.hierarchy.subspaces[static_cast<std::size_t>(id)].dimension);
    if (best_dim < 2) report.exceptional.push_back(p);
  }

  if (report.space.catalog.size() <= options.histogram_limit)
    report.full_line_histogram = full_line_size_histogram(report.space.catalog);

  for (int p : structure.isolated_points())
    report.warnings.push_back("point " + std::to_string(p) +
                              " lies on no line and is unconstrained");

  if (options.labeling)
    report.labeling = run_labeling_suite(*options.labeling, report.space,
                                         report.hierarchy, report.diagnostics);
  return report;
}

std::string to_json(const AnalysisReport& report) {
  const auto& space = report.space;
  const auto& catalog = space.catalog;
  json j;
  j["points"] = catalog.structure().point_count();
  j["lines"] = json::array();
  for (auto [a, b] : catalog.structure().lines()) j["lines"].push_back({a, b});

  j["hyperplanes"] = json::array();
  for (int i = 0; i < catalog.size(); ++i)
    j["hyperplanes"].push_back({{"index", i}, {"set", point_set_json(catalog, i)}});

  j["veldkamp_lines"] = json::array();
  for (const auto& line : space.lines3) j["veldkamp_lines"].push_back(line_json(line));

  if (report.full_line_histogram) {
    json histogram = json::object();
    for (auto [size, count] : *report.full_line_histogram)
      histogram[std::to_string(size)] = count;
    j["full_line_size_histogram"] = histogram;
  } else {
    j["full_line_size_histogram"] = nullptr;
  }

  auto ids = listed_subspaces(report.hierarchy);
  j["subspaces"] = json::array();
  for (int id : ids) {
    const auto& sub = report.hierarchy.subspaces[static_cast<std::size_t>(id)];
    json entry;
    entry["dim"] = sub.dimension;
    entry["members"] = sub.members;
    entry["representative"] =
        sub.representative ? json(*sub.representative) : json(nullptr);
    json shared = json::array();
    for (int other : ids) {
      if (other == id) continue;
      const auto& o = report.hierarchy.subspaces[static_cast<std::size_t>(other)];
      auto common = intersect(sub, o);
      if (common.size() == sub.members.size() || common.size() == o.members.size())
        continue;  // nested pair, not a proper overlap
      for (const auto& line : shared_lines(space, sub, o)) {
        json entry_line = line_json(line);
        if (std::find(shared.begin(), shared.end(), entry_line) == shared.end())
          shared.push_back(entry_line);
      }
    }
    entry["shared_lines"] = shared;
    entry["maximal"] = sub.maximal;
    entry["distinguished"] =
        report.hierarchy.distinguished && *report.hierarchy.distinguished == id;
    entry["induced_line_count"] = induced_line_count(space, sub.members);
    j["subspaces"].push_back(entry);
  }

  json degrees = json::array();
  json memberships = json::array();
  std::map<int, int> listed_position;
  for (int k = 0; k < static_cast<int>(ids.size()); ++k)
    listed_position[ids[static_cast<std::size_t>(k)]] = k;
  for (const auto& d : report.diagnostics) {
    degrees.push_back(d.degree);
    json m = json::array();
    for (int id : d.memberships)
      if (auto it = listed_position.find(id); it != listed_position.end())
        m.push_back(it->second);
    memberships.push_back(m);
  }
  j["diagnostics"] = {{"degrees", degrees},
                      {"memberships", memberships},
                      {"exceptional", report.exceptional}};

  if (report.labeling) {
    const auto& lab = *report.labeling;
    json l;
    l["name"] = lab.labeling.name;
    l["width"] = lab.labeling.width;
    json vertex_labels = json::array();
    for (const auto& e : lab.labeling.by_point)
      vertex_labels.push_back(format_pauli(e));
    l["vertex_labels"] = vertex_labels;
    json induced_labels = json::array();
    for (const auto& e : lab.induced.by_hyperplane)
      induced_labels.push_back(format_pauli(e));
    l["induced_labels"] = induced_labels;
    l["line_product_violations"] = lab.line_product_violations;
    l["bijection_on_top"] =
        lab.bijection_on_top ? json(*lab.bijection_on_top) : json(nullptr);
    l["bijection_on_distinguished"] = lab.bijection_on_distinguished
                                          ? json(*lab.bijection_on_distinguished)
                                          : json(nullptr);
    l["isotropic_line_count"] =
        lab.isotropic_line_count ? json(*lab.isotropic_line_count) : json(nullptr);
    l["gq22"] = lab.gq22 ? json(*lab.gq22) : json(nullptr);
    if (lab.mermin_peres) {
      json grid = json::array();
      json grid_points = json::array();
      for (int i = 0; i < 3; ++i) {
        json row = json::array();
        json row_points = json::array();
        for (int jx = 0; jx < 3; ++jx) {
          row.push_back(format_pauli(
              lab.mermin_peres->grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(jx)]));
          row_points.push_back(
              lab.mermin_peres
                  ->grid_points[static_cast<std::size_t>(i)][static_cast<std::size_t>(jx)]);
        }
        grid.push_back(row);
        grid_points.push_back(row_points);
      }
      json shared = json::array();
      for (const auto& line : lab.mermin_peres->shared_lines)
        shared.push_back(line_json(line));
      l["mermin_peres"] = {
          {"grid", grid},
          {"grid_points", grid_points},
          {"shared_lines", shared},
          {"signs", lab.mermin_peres->verdict.context_signs},
          {"is_magic", lab.mermin_peres->verdict.is_magic}};
    } else {
      l["mermin_peres"] = nullptr;
      l["mermin_peres_error"] =
          lab.mermin_peres_error ? json(*lab.mermin_peres_error) : json(nullptr);
    }
    json fanos = json::array();
    for (const auto& plane : lab.y_only_fanos) fanos.push_back(plane.members);
    l["y_only_fanos"] = fanos;
    if (lab.pasch) {
      json lines = json::array();
      for (const auto& line : lab.pasch->lines)
        lines.push_back({line[0], line[1], line[2]});
      l["pasch"] = {{"points", lab.pasch->points}, {"lines", lines}};
    } else {
      l["pasch"] = nullptr;
    }
    if (lab.distinguished_subgroup) {
      l["distinguished_subgroup"] = {
          {"closed", lab.distinguished_subgroup->closed},
          {"rank", lab.distinguished_subgroup->rank},
          {"nondegenerate", lab.distinguished_subgroup->nondegenerate}};
    } else {
      l["distinguished_subgroup"] = nullptr;
    }
    j["labeling"] = l;
  } else {
    j["labeling"] = nullptr;
  }

  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& report) {
  const auto& space = report.space;
  const auto& catalog = space.catalog;
  std::ostringstream out;
  out << "points: " << catalog.structure().point_count() << "\n";
  out << "lines: " << catalog.structure().lines().size() << "\n";
  out << "hyperplanes: " << catalog.size() << "\n";
  out << "veldkamp size-3 lines: " << space.lines3.size() << "\n";
  if (report.full_line_histogram) {
    out << "full line sizes:";
    for (auto [size, count] : *report.full_line_histogram)
      out << " " << size << "x" << count;
    out << "\n";
  }

  out << "subspaces:\n";
  for (int id : listed_subspaces(report.hierarchy)) {
    const auto& sub = report.hierarchy.subspaces[static_cast<std::size_t>(id)];
    out << "  PG(" << sub.dimension << ",2): " << sub.members.size()
        << " points, " << induced_line_count(space, sub.members) << " lines";
    if (sub.representative)
      out << ", representative H" << *sub.representative << " = "
          << catalog.set(*sub.representative).to_string();
    if (!sub.maximal) out << " (embedded)";
    if (report.hierarchy.distinguished && *report.hierarchy.distinguished == id)
      out << " (distinguished)";
    out << "\n";
  }

  out << "exceptional points:";
  if (report.exceptional.empty()) out << " none";
  for (int p : report.exceptional)
    out << " H" << p << " = " << catalog.set(p).to_string()
        << " (degree " << space.degree[static_cast<std::size_t>(p)] << ")";
  out << "\n";

  if (report.labeling) {
    const auto& lab = *report.labeling;
    out << "labeling: " << lab.labeling.name << " (width " << lab.labeling.width
        << ")\n";
    out << "  line product violations: " << lab.line_product_violations.size()
        << "\n";
    if (lab.bijection_on_top)
      out << "  bijection on largest subspace: "
          << (*lab.bijection_on_top ? "yes" : "no") << "\n";
    if (lab.bijection_on_distinguished)
      out << "  bijection on distinguished PG(3,2): "
          << (*lab.bijection_on_distinguished ? "yes" : "no") << "\n";
    if (lab.isotropic_line_count)
      out << "  isotropic lines in distinguished PG(3,2): "
          << *lab.isotropic_line_count
          << (lab.gq22 && *lab.gq22 ? " (GQ(2,2) certified)" : "") << "\n";
    if (lab.mermin_peres) {
      out << "  magic square: "
          << (lab.mermin_peres->verdict.is_magic ? "magic" : "not magic")
          << ", signs";
      for (int s : lab.mermin_peres->verdict.context_signs)
        out << " " << (s > 0 ? "+1" : "-1");
      out << "\n";
      for (const auto& row : lab.mermin_peres->grid) {
        out << "    ";
        for (const auto& e : row) out << format_pauli(e) << " ";
        out << "\n";
      }
    } else if (lab.mermin_peres_error) {
      out << "  magic square: not extracted (" << *lab.mermin_peres_error
          << ")\n";
    }
    out << "  Y-only Fano planes: " << lab.y_only_fanos.size() << "\n";
    for (const auto& plane : lab.y_only_fanos) {
      out << "    members:";
      for (int m : plane.members) out << " H" << m;
      out << "\n";
    }
    if (lab.pasch) {
      out << "  Pasch configuration: points";
      for (int p : lab.pasch->points) out << " H" << p;
      out << "\n";
    }
    if (lab.distinguished_subgroup)
      out << "  distinguished labels: "
          << (lab.distinguished_subgroup->closed ? "closed" : "not closed")
          << ", rank " << lab.distinguished_subgroup->rank << ", "
          << (lab.distinguished_subgroup->nondegenerate ? "nondegenerate"
                                                        : "degenerate")
          << "\n";
  }

  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string emit_dot(const AnalysisReport& report, DotView view) {
  const auto& space = report.space;
  const auto& structure = space.catalog.structure();
  std::ostringstream out;

  switch (view) {
    case DotView::Diagram: {
      out << "graph diagram {\n";
      for (int p = 0; p < structure.point_count(); ++p)
        out << "  v" << p << " [label=\"" << p << "\"];\n";
      for (auto [a, b] : structure.lines())
        out << "  v" << a << " -- v" << b << ";\n";
      out << "}\n";
      break;
    }
    case DotView::Veldkamp: {
      out << "graph veldkamp {\n";
      for (int i = 0; i < space.catalog.size(); ++i)
        out << "  h" << i << " [label=\"H" << i << "\"];\n";
      for (std::size_t k = 0; k < space.lines3.size(); ++k) {
        out << "  l" << k << " [shape=point];\n";
        for (int m : space.lines3[k].members)
          out << "  l" << k << " -- h" << m << ";\n";
      }
      out << "}\n";
      break;
    }
    case DotView::Hierarchy: {
      out << "digraph hierarchy {\n";
      auto ids = listed_subspaces(report.hierarchy);
      for (int k = 0; k < static_cast<int>(ids.size()); ++k) {
        const auto& sub =
            report.hierarchy.subspaces[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])];
        out << "  s" << k << " [label=\"PG(" << sub.dimension << ",2) "
            << sub.members.size() << " pts";
        if (sub.representative) out << "\\nrep H" << *sub.representative;
        if (report.hierarchy.distinguished &&
            *report.hierarchy.distinguished == ids[static_cast<std::size_t>(k)])
          out << "\\ndistinguished";
        out << "\"];\n";
      }
      auto members_of = [&](int k) -> const std::vector<int>& {
        return report.hierarchy
            .subspaces[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])]
            .members;
      };
      auto contains = [&](int outer, int inner) {
        return std::includes(members_of(outer).begin(), members_of(outer).end(),
                             members_of(inner).begin(), members_of(inner).end());
      };
      for (int a = 0; a < static_cast<int>(ids.size()); ++a)
        for (int b = 0; b < static_cast<int>(ids.size()); ++b) {
          if (a == b || !contains(a, b)) continue;
          bool direct = true;
          for (int c = 0; c < static_cast<int>(ids.size()); ++c)
            if (c != a && c != b && contains(a, c) && contains(c, b)) direct = false;
          if (direct) out << "  s" << a << " -> s" << b << ";\n";
        }
      // Dashed edges for proper overlaps carrying at least one shared line.
      for (int a = 0; a < static_cast<int>(ids.size()); ++a)
        for (int b = a + 1; b < static_cast<int>(ids.size()); ++b) {
          if (contains(a, b) || contains(b, a)) continue;
          const auto& sa =
              report.hierarchy.subspaces[static_cast<std::size_t>(ids[static_cast<std::size_t>(a)])];
          const auto& sb =
              report.hierarchy.subspaces[static_cast<std::size_t>(ids[static_cast<std::size_t>(b)])];
          if (!shared_lines(space, sa, sb).empty())
            out << "  s" << a << " -> s" << b
                << " [dir=none, style=dashed, label=\"shared line\"];\n";
        }
      out << "}\n";
      break;
    }
  }
  return out.str();
}

std::vector<std::string> check_dynkin_expectations(const AnalysisReport& report,
                                                   int n) {
  std::vector<std::string> failures;
  auto expect = [&failures](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  static const std::map<int, std::pair<int, int>> kCounts = {
      {4, {16, 35}}, {5, {23, 47}}, {6, {40, 168}}, {7, {64, 332}}, {8, {105, 876}}};
  auto it = kCounts.find(n);
  if (it == kCounts.end()) {
    failures.push_back("no reference expectations for n=" + std::to_string(n));
    return failures;
  }

  const auto& space = report.space;
  const auto& hierarchy = report.hierarchy;
  expect(space.catalog.size() == it->second.first,
         "hyperplane count " + std::to_string(space.catalog.size()) +
             " != " + std::to_string(it->second.first));
  expect(static_cast<int>(space.lines3.size()) == it->second.second,
         "veldkamp line count " + std::to_string(space.lines3.size()) +
             " != " + std::to_string(it->second.second));

  std::multiset<int> dims;
  for (int id : hierarchy.maximal)
    dims.insert(hierarchy.subspaces[static_cast<std::size_t>(id)].dimension);
  static const std::map<int, std::multiset<int>> kDims = {
      {4, {3}}, {5, {3, 2, 2}}, {6, {4, 2, 2, 1}}, {7, {4, 4, 3, 3, 1}},
      {8, {5, 4, 3, 3, 3, 3, 2}}};
  if (auto want = kDims.find(n); want != kDims.end())
    expect(dims == want->second, "maximal subspace dimensions do not match");

  expect(hierarchy.distinguished.has_value(), "no distinguished PG(3,2)");

  // Points in no maximal subspace of dimension >= 2. The pair of special
  // points at n=8 lives inside the maximal Y-only Fano plane and is reported
  // through that section instead.
  static const std::map<int, std::size_t> kExceptional = {
      {4, 1}, {5, 0}, {6, 1}, {7, 1}, {8, 0}};
  if (auto want = kExceptional.find(n); want != kExceptional.end())
    expect(report.exceptional.size() == want->second,
           "exceptional point count " + std::to_string(report.exceptional.size()) +
               " != " + std::to_string(want->second));

  if (report.labeling) {
    const auto& lab = *report.labeling;
    expect(lab.line_product_violations.empty(), "line products violate identity");
    expect(lab.bijection_on_distinguished.value_or(false),
           "labels on the distinguished PG(3,2) are not a bijection");
    expect(lab.isotropic_line_count.value_or(0) == 15,
           "distinguished PG(3,2) does not carry 15 isotropic lines");
    expect(lab.gq22.value_or(false), "W(3,2) fails the GQ(2,2) check");
    if (n == 4) {
      expect(lab.mermin_peres_error.has_value(),
             "n=4 should have no magic-square extraction");
    } else {
      expect(lab.mermin_peres && lab.mermin_peres->verdict.is_magic,
             "magic square verdict is not magic");
    }
    if (n == 4 || n == 8)
      expect(lab.bijection_on_top.value_or(false),
             "labels on the largest subspace are not a bijection");
    if (n == 8) {
      expect(lab.y_only_fanos.size() == 1, "expected exactly one Y-only Fano plane");
      expect(lab.pasch.has_value(), "no Pasch configuration extracted");
      expect(lab.distinguished_subgroup && lab.distinguished_subgroup->closed &&
                 lab.distinguished_subgroup->rank == 4 &&
                 lab.distinguished_subgroup->nondegenerate,
             "distinguished labels are not a nondegenerate rank-4 subgroup");
    } else {
      expect(lab.y_only_fanos.empty(), "unexpected Y-only Fano plane");
    }
  }

  if (report.labeling && (n == 4 || n == 5)) {
    auto diffs = (n == 4) ? tables::compare_d4(space, report.labeling->induced)
                          : tables::compare_d5(space, hierarchy,
                                               report.labeling->induced);
    for (const auto& d : diffs) failures.push_back("table: " + d);
  }
  return failures;
}

}  // namespace veld
