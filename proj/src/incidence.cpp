#include "veldkamp/incidence.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace veld {

PointSet PointSet::of(std::initializer_list<int> points, int width) {
  PointSet s(0, width);
  for (int p : points) {
    if (p < 0 || p >= width) throw std::invalid_argument("point out of range");
    s.bits |= std::uint64_t{1} << p;
  }
  return s;
}

PointSet PointSet::from_points(const std::vector<int>& points, int width) {
  PointSet s(0, width);
  for (int p : points) {
    if (p < 0 || p >= width) throw std::invalid_argument("point out of range");
    s.bits |= std::uint64_t{1} << p;
  }
  return s;
}

int PointSet::count() const { return std::popcount(bits); }

std::vector<int> PointSet::to_points() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int p = 0; p < width; ++p)
    if (contains(p)) out.push_back(p);
  return out;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : to_points()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

IncidenceStructure::IncidenceStructure(int point_count,
                                       std::vector<std::pair<int, int>> lines)
    : point_count_(point_count) {
  if (point_count <= 0)
    throw std::invalid_argument("point_count must be positive");
  if (point_count > 64)
    throw std::invalid_argument("at most 64 points are supported");
  if (lines.empty())
    throw std::invalid_argument("structure must have at least one line");

  for (auto& [a, b] : lines) {
    if (a == b) throw std::invalid_argument("line endpoints must be distinct");
    if (a < 0 || b < 0 || a >= point_count || b >= point_count)
      throw std::invalid_argument("line endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(lines.begin(), lines.end());
  if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    throw std::invalid_argument("duplicate line");

  lines_ = std::move(lines);
  line_masks_.reserve(lines_.size());
  orders_.assign(static_cast<std::size_t>(point_count_), 0);
  for (auto [a, b] : lines_) {
    line_masks_.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    ++orders_[static_cast<std::size_t>(a)];
    ++orders_[static_cast<std::size_t>(b)];
  }
}

std::uint64_t IncidenceStructure::full_mask() const {
  return point_count_ == 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << point_count_) - 1;
}

int IncidenceStructure::order_of(int p) const {
  if (p < 0 || p >= point_count_)
    throw std::invalid_argument("point out of range");
  return orders_[static_cast<std::size_t>(p)];
}

std::vector<int> IncidenceStructure::isolated_points() const {
  std::vector<int> out;
  for (int p = 0; p < point_count_; ++p)
    if (orders_[static_cast<std::size_t>(p)] == 0) out.push_back(p);
  return out;
}

IncidenceStructure build_extended_dynkin_d(int n) {
  if (n < 4) throw std::invalid_argument("extended D diagram requires n >= 4");
  std::vector<std::pair<int, int>> lines;
  lines.reserve(static_cast<std::size_t>(n));
  lines.emplace_back(0, 2);
  lines.emplace_back(1, 2);
  for (int k = 2; k <= n - 3; ++k) lines.emplace_back(k, k + 1);
  lines.emplace_back(n - 2, n - 1);
  lines.emplace_back(n - 2, n);
  return IncidenceStructure(n + 1, std::move(lines));
}

IncidenceStructure parse_edge_list(std::string_view text,
                                   std::vector<std::string>* warnings) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  std::set<int> used;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<long long> nums;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      long long value = 0;
      auto token = line.substr(i, j - i);
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw ParseError(line_no, "expected a nonnegative integer, got '" +
                                      std::string(token) + "'");
      nums.push_back(value);
      i = j;
    }
    if (nums.empty()) continue;  // blank or comment-only
    if (nums.size() != 2)
      throw ParseError(line_no, "expected exactly two vertex ids");
    if (nums[0] > 63 || nums[1] > 63)
      throw ParseError(line_no, "vertex id exceeds the supported maximum (63)");
    int a = static_cast<int>(nums[0]);
    int b = static_cast<int>(nums[1]);
    if (a == b) throw ParseError(line_no, "self-loop is not a valid line");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " +
                                    std::to_string(b));
    edges.emplace_back(a, b);
    used.insert(a);
    used.insert(b);
  }

  if (edges.empty()) throw ParseError(line_no, "no edges in input");

  int max_id = *used.rbegin();
  if (static_cast<int>(used.size()) != max_id + 1) {
    // Sparse ids: compact to 0..P-1 and report the mapping.
    std::map<int, int> remap;
    int next = 0;
    for (int v : used) remap[v] = next++;
    for (auto& [a, b] : edges) {
      a = remap[a];
      b = remap[b];
    }
    if (warnings) {
      std::ostringstream msg;
      msg << "sparse vertex ids compacted:";
      for (auto [old_id, new_id] : remap)
        if (old_id != new_id) msg << ' ' << old_id << "->" << new_id;
      warnings->push_back(msg.str());
    }
    max_id = next - 1;
  }

  return IncidenceStructure(max_id + 1, std::move(edges));
}

std::string emit_edge_list(const IncidenceStructure& s) {
  std::string out;
  for (auto [a, b] : s.lines()) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

int point_order(const IncidenceStructure& s, int p) { return s.order_of(p); }

}  // namespace veld
