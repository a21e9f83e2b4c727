#include "veldkamp/gf2space.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace veld {

namespace detail {

namespace {

struct SearchContext {
  const std::vector<std::uint64_t>* sorted_values;
  const std::unordered_set<std::uint64_t>* value_set;
  std::atomic<long long>* produced;
  long long cap;
  bool* overflow;
};

// `span` holds every nonzero element of the current subspace, the last basis
// vector being span.back()'s chosen generator. Records the node (rank >= 2)
// and recurses into canonical single-vector extensions.
void visit(const SearchContext& ctx, const std::vector<std::uint64_t>& span,
           std::uint64_t last_basis, std::vector<std::vector<std::uint64_t>>& out) {
  if (*ctx.overflow) return;

  bool extendable = false;
  std::vector<std::uint64_t> choices;
  for (std::uint64_t v : *ctx.sorted_values) {
    if (std::find(span.begin(), span.end(), v) != span.end()) continue;
    bool layer_inside = true;
    bool layer_min = true;
    for (std::uint64_t w : span) {
      const std::uint64_t u = v ^ w;
      if (!ctx.value_set->contains(u)) {
        layer_inside = false;
        break;
      }
      if (u < v) layer_min = false;
    }
    if (!layer_inside) continue;
    extendable = true;
    if (v > last_basis && layer_min) choices.push_back(v);
  }

  if (span.size() >= 3) {
    auto node = span;
    if (!extendable) node.push_back(0);  // cheap in-band maximality mark
    out.push_back(std::move(node));
    if (ctx.produced->fetch_add(1, std::memory_order_relaxed) + 1 > ctx.cap)
      *ctx.overflow = true;
  }

  for (std::uint64_t v : choices) {
    std::vector<std::uint64_t> child;
    child.reserve(span.size() * 2 + 1);
    child.push_back(v);
    for (std::uint64_t w : span) child.push_back(w);
    for (std::uint64_t w : span) child.push_back(v ^ w);
    visit(ctx, child, v, out);
  }
}

}  // namespace

std::vector<RawSubspace> enumerate_gf2_subspaces(
    const std::vector<std::uint64_t>& vectors, long long max_subspaces) {
  std::unordered_map<std::uint64_t, int> index_of;
  index_of.reserve(vectors.size() * 2);
  for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
    const std::uint64_t v = vectors[static_cast<std::size_t>(i)];
    if (v == 0) throw std::invalid_argument("zero vector in subspace search");
    if (!index_of.emplace(v, i).second)
      throw std::invalid_argument("duplicate vector in subspace search");
  }

  std::vector<std::uint64_t> sorted_values = vectors;
  std::sort(sorted_values.begin(), sorted_values.end());
  std::unordered_set<std::uint64_t> value_set(sorted_values.begin(),
                                              sorted_values.end());

  std::atomic<long long> produced{0};
  bool overflow = false;
  SearchContext ctx{&sorted_values, &value_set, &produced, max_subspaces,
                    &overflow};

  const int roots = static_cast<int>(sorted_values.size());
  std::vector<std::vector<std::vector<std::uint64_t>>> per_root(
      static_cast<std::size_t>(roots));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int r = 0; r < roots; ++r) {
    const std::uint64_t v = sorted_values[static_cast<std::size_t>(r)];
    visit(ctx, {v}, v, per_root[static_cast<std::size_t>(r)]);
  }

  if (overflow)
    throw CapacityError("subspace search exceeded the cap of " +
                        std::to_string(max_subspaces) + " subspaces");

  std::vector<RawSubspace> out;
  out.reserve(static_cast<std::size_t>(produced.load()));
  for (auto& root_results : per_root) {
    for (auto& node : root_results) {
      RawSubspace sub;
      sub.maximal = !node.empty() && node.back() == 0;
      if (sub.maximal) node.pop_back();
      sub.members.reserve(node.size());
      for (std::uint64_t v : node) sub.members.push_back(index_of.at(v));
      std::sort(sub.members.begin(), sub.members.end());
      out.push_back(std::move(sub));
    }
  }
  return out;
}

}  // namespace detail

namespace {

int dimension_from_size(std::size_t member_count) {
  const auto with_zero = member_count + 1;
  if (!std::has_single_bit(with_zero))
    throw std::logic_error("subspace member count is not 2^k - 1");
  return std::bit_width(with_zero) - 2;  // projective dimension
}

std::optional<int> find_subspace_with_members(const SubspaceHierarchy& hierarchy,
                                              const std::vector<int>& members) {
  for (int i = 0; i < static_cast<int>(hierarchy.subspaces.size()); ++i)
    if (hierarchy.subspaces[static_cast<std::size_t>(i)].members == members)
      return i;
  return std::nullopt;
}

std::vector<VeldkampLine> lines_inside(const VeldkampSpace& space,
                                       const std::vector<int>& members) {
  std::unordered_set<int> inside(members.begin(), members.end());
  std::vector<VeldkampLine> out;
  for (const auto& line : space.lines3)
    if (inside.contains(line.members[0]) && inside.contains(line.members[1]) &&
        inside.contains(line.members[2]))
      out.push_back(line);
  return out;
}

bool lines_disjoint(const VeldkampLine& a, const VeldkampLine& b) {
  for (int x : a.members)
    for (int y : b.members)
      if (x == y) return false;
  return true;
}

// Selection of the distinguished PG(3,2).
//   1. A 15-point intersection of two maximal subspaces of dimension >= 3.
//   2. Otherwise, the unique maximal subspace when its dimension is 3.
//   3. Otherwise (one big space plus two Fano planes), the span of the two
//      lines the planes share with the big space.
std::optional<int> select_distinguished(const VeldkampSpace& space,
                                        const SubspaceHierarchy& hierarchy) {
  const auto& subs = hierarchy.subspaces;

  std::vector<int> candidates;
  for (std::size_t i = 0; i < hierarchy.maximal.size(); ++i) {
    const auto& a = subs[static_cast<std::size_t>(hierarchy.maximal[i])];
    if (a.dimension < 3) continue;
    for (std::size_t j = i + 1; j < hierarchy.maximal.size(); ++j) {
      const auto& b = subs[static_cast<std::size_t>(hierarchy.maximal[j])];
      if (b.dimension < 3) continue;
      auto common = intersect(a, b);
      if (common.size() != 15) continue;
      if (auto id = find_subspace_with_members(hierarchy, common)) {
        if (std::find(candidates.begin(), candidates.end(), *id) ==
            candidates.end())
          candidates.push_back(*id);
      }
    }
  }
  if (candidates.size() == 1) return candidates.front();
  if (candidates.size() > 1) return std::nullopt;  // ambiguous

  int top_dim = 0;
  for (int m : hierarchy.maximal)
    top_dim = std::max(top_dim, subs[static_cast<std::size_t>(m)].dimension);

  if (top_dim == 3) {
    std::optional<int> unique_d3;
    for (int m : hierarchy.maximal) {
      if (subs[static_cast<std::size_t>(m)].dimension != 3) continue;
      if (unique_d3) return std::nullopt;
      unique_d3 = m;
    }
    return unique_d3;
  }

  if (top_dim < 4) return std::nullopt;

  std::optional<int> top;
  std::vector<int> planes;
  for (int m : hierarchy.maximal) {
    const int d = subs[static_cast<std::size_t>(m)].dimension;
    if (d == top_dim) {
      if (top) return std::nullopt;  // two big spaces would have matched rule 1
      top = m;
    } else if (d == 2) {
      planes.push_back(m);
    }
  }
  if (!top || planes.size() != 2) return std::nullopt;

  std::vector<VeldkampLine> shared;
  for (int p : planes) {
    auto common = intersect(subs[static_cast<std::size_t>(*top)],
                            subs[static_cast<std::size_t>(p)]);
    auto lines = lines_inside(space, common);
    if (lines.size() != 1) return std::nullopt;
    shared.push_back(lines.front());
  }
  if (!lines_disjoint(shared[0], shared[1])) return std::nullopt;

  // Span of the two shared lines, mapped back to catalog indices.
  std::array<std::uint64_t, 64> echelon{};
  auto insert = [&echelon](std::uint64_t v) {
    while (v != 0) {
      const int hb = 63 - std::countl_zero(v);
      if (echelon[static_cast<std::size_t>(hb)] == 0) {
        echelon[static_cast<std::size_t>(hb)] = v;
        return;
      }
      v ^= echelon[static_cast<std::size_t>(hb)];
    }
  };
  for (const auto& line : shared)
    for (int m : line.members) insert(space.catalog.complement_bits(m));
  std::vector<std::uint64_t> basis;
  for (std::uint64_t b : echelon)
    if (b != 0) basis.push_back(b);

  std::vector<int> members;
  const std::uint64_t full = space.catalog.structure().full_mask();
  for (std::uint64_t combo = 1; combo < (std::uint64_t{1} << basis.size());
       ++combo) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((combo >> k) & 1) v ^= basis[k];
    auto idx = space.catalog.find(full & ~v);
    if (!idx) return std::nullopt;  // span leaves the Veldkamp space
    members.push_back(*idx);
  }
  std::sort(members.begin(), members.end());
  if (members.size() != 15) return std::nullopt;
  return find_subspace_with_members(hierarchy, members);
}

}  // namespace

SubspaceHierarchy build_subspace_hierarchy(const VeldkampSpace& space,
                                           const SubspaceOptions& options) {
  const auto& catalog = space.catalog;
  std::vector<std::uint64_t> vectors;
  vectors.reserve(static_cast<std::size_t>(catalog.size()));
  for (int i = 0; i < catalog.size(); ++i)
    vectors.push_back(catalog.complement_bits(i));

  auto raw = detail::enumerate_gf2_subspaces(vectors, options.max_subspaces);

  SubspaceHierarchy hierarchy;
  hierarchy.subspaces.reserve(raw.size());
  for (auto& r : raw) {
    ProjectiveSubspace sub;
    sub.dimension = dimension_from_size(r.members.size());
    sub.members = std::move(r.members);
    sub.maximal = r.maximal;
    sub.representative = representative_hyperplane(catalog, sub);
    if (sub.maximal)
      hierarchy.maximal.push_back(static_cast<int>(hierarchy.subspaces.size()));
    hierarchy.subspaces.push_back(std::move(sub));
  }

  hierarchy.distinguished = select_distinguished(space, hierarchy);
  return hierarchy;
}

std::vector<ProjectiveSubspace> maximal_subspaces(const VeldkampSpace& space) {
  auto hierarchy = build_subspace_hierarchy(space);
  std::vector<ProjectiveSubspace> out;
  out.reserve(hierarchy.maximal.size());
  for (int id : hierarchy.maximal)
    out.push_back(hierarchy.subspaces[static_cast<std::size_t>(id)]);
  return out;
}

std::vector<int> intersect(const ProjectiveSubspace& a, const ProjectiveSubspace& b) {
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(out));
  return out;
}

std::vector<VeldkampLine> shared_lines(const VeldkampSpace& space,
                                       const ProjectiveSubspace& a,
                                       const ProjectiveSubspace& b) {
  return lines_inside(space, intersect(a, b));
}

std::optional<int> representative_hyperplane(const HyperplaneCatalog& catalog,
                                             const ProjectiveSubspace& sub) {
  for (int h : sub.members) {
    const std::uint64_t set_h = catalog.set_bits(h);
    bool inside_all = true;
    for (int m : sub.members) {
      if (m == h) continue;
      if ((set_h & ~catalog.set_bits(m)) != 0) {
        inside_all = false;
        break;
      }
    }
    if (inside_all) return h;
  }
  return std::nullopt;
}

std::vector<ProjectiveSubspace> find_fano_planes_with_points(
    const SubspaceHierarchy& hierarchy, const std::vector<int>& required) {
  std::vector<int> wanted = required;
  std::sort(wanted.begin(), wanted.end());
  std::vector<ProjectiveSubspace> out;
  for (const auto& sub : hierarchy.subspaces) {
    if (sub.dimension != 2) continue;
    if (std::includes(sub.members.begin(), sub.members.end(), wanted.begin(),
                      wanted.end()))
      out.push_back(sub);
  }
  return out;
}

PaschConfiguration pasch_from_fano(const VeldkampSpace& space,
                                   const ProjectiveSubspace& plane, int removed) {
  if (plane.members.size() != 7)
    throw std::invalid_argument("pasch_from_fano requires a 7-point plane");
  if (std::find(plane.members.begin(), plane.members.end(), removed) ==
      plane.members.end())
    throw std::invalid_argument("removed point is not a member of the plane");

  auto lines = lines_inside(space, plane.members);
  if (lines.size() != 7)
    throw std::invalid_argument("plane does not carry 7 induced lines");

  PaschConfiguration pasch;
  std::size_t np = 0, nl = 0;
  for (int m : plane.members)
    if (m != removed) pasch.points[np++] = m;
  for (const auto& line : lines) {
    if (std::find(line.members.begin(), line.members.end(), removed) !=
        line.members.end())
      continue;
    if (nl >= 4) throw std::logic_error("more than 4 lines avoid the removed point");
    pasch.lines[nl++] = line.members;
  }
  if (nl != 4) throw std::logic_error("expected 4 lines avoiding the removed point");

  for (int p : pasch.points) {
    int on = 0;
    for (const auto& line : pasch.lines)
      on += std::count(line.begin(), line.end(), p);
    if (on != 2)
      throw std::logic_error("Pasch configuration point not on exactly 2 lines");
  }
  return pasch;
}

std::vector<PointDiagnostics> point_diagnostics(const VeldkampSpace& space,
                                                const SubspaceHierarchy& hierarchy) {
  std::vector<PointDiagnostics> out(static_cast<std::size_t>(space.catalog.size()));
  for (int i = 0; i < space.catalog.size(); ++i)
    out[static_cast<std::size_t>(i)].degree = space.degree[static_cast<std::size_t>(i)];
  for (int id : hierarchy.maximal)
    for (int m : hierarchy.subspaces[static_cast<std::size_t>(id)].members)
      out[static_cast<std::size_t>(m)].memberships.push_back(id);
  return out;
}

}  // namespace veld
