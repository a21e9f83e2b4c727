#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace veld {

// Parse failures carry the 1-based line number of the offending input line.
struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
  int line;
};

// A subset of the points 0..width-1, stored as a bit mask (width <= 64).
struct PointSet {
  std::uint64_t bits = 0;
  int width = 0;

  PointSet() = default;
  PointSet(std::uint64_t b, int w) : bits(b), width(w) {}
  static PointSet of(std::initializer_list<int> points, int width);
  static PointSet from_points(const std::vector<int>& points, int width);

  bool contains(int p) const { return ((bits >> p) & 1u) != 0; }
  int count() const;
  std::vector<int> to_points() const;
  std::string to_string() const;  // e.g. "{0,2,4}"

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

// A point-line incidence structure in which every line has exactly two
// distinct points: a finite simple graph with at least one edge.
// Immutable after construction; safe to share across threads.
class IncidenceStructure {
 public:
  // Lines are unordered pairs of distinct points < point_count; duplicates
  // rejected. Throws std::invalid_argument on any violation.
  IncidenceStructure(int point_count, std::vector<std::pair<int, int>> lines);

  int point_count() const { return point_count_; }
  const std::vector<std::pair<int, int>>& lines() const { return lines_; }
  const std::vector<std::uint64_t>& line_masks() const { return line_masks_; }
  std::uint64_t full_mask() const;

  // Number of lines through p (the order of the point).
  int order_of(int p) const;

  // Points on no line. Legal, but unconstrained by the hyperplane axiom;
  // callers may want to warn.
  std::vector<int> isolated_points() const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.point_count_ == b.point_count_ && a.lines_ == b.lines_;
  }

 private:
  int point_count_ = 0;
  std::vector<std::pair<int, int>> lines_;      // normalized (a<b), sorted
  std::vector<std::uint64_t> line_masks_;
  std::vector<int> orders_;
};

// The extended Dynkin diagram of type D-tilde with vertices 0..n: a path
// 2-3-...-(n-2) with a two-vertex fork at each end. Requires n >= 4.
IncidenceStructure build_extended_dynkin_d(int n);

// Edge-list text format: one edge per line as two whitespace-separated
// nonnegative integers; '#' starts a comment; blank lines ignored.
// Sparse vertex ids are compacted to 0..P-1 with the mapping reported
// through `warnings`. Throws ParseError on malformed input, self-loops,
// duplicate edges, or an empty edge set.
IncidenceStructure parse_edge_list(std::string_view text,
                                   std::vector<std::string>* warnings = nullptr);

std::string emit_edge_list(const IncidenceStructure& s);

// Count of lines through p; throws std::invalid_argument if p is out of range.
int point_order(const IncidenceStructure& s, int p);

}  // namespace veld
