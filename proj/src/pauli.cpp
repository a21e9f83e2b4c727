#include "veldkamp/pauli.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace veld {

namespace {

constexpr int kMaxWidth = 32;

void require_same_width(const PauliElement& a, const PauliElement& b) {
  if (a.width != b.width)
    throw std::invalid_argument("Pauli elements have different widths");
}

// Single-qubit code: 0=I, 1=X, 2=Z, 3=Y (x | z<<1).
inline int qubit_code(const PauliElement& e, int k) {
  return static_cast<int>(((e.x >> k) & 1) | (((e.z >> k) & 1) << 1));
}

// phase_table[a][b] = exponent of i in sigma_a * sigma_b = i^e sigma_(a^b).
constexpr int kPhaseTable[4][4] = {
    {0, 0, 0, 0},  // I*
    {0, 0, 3, 1},  // X*: X*Z = -iY, X*Y = iZ
    {0, 1, 0, 3},  // Z*: Z*X = iY,  Z*Y = -iX
    {0, 3, 1, 0},  // Y*: Y*X = -iZ, Y*Z = iX
};

std::uint64_t packed_xz(const PauliElement& e) {
  return e.x | (e.z << e.width);
}

struct XorBasis {
  std::array<std::uint64_t, 64> at{};
  int rank = 0;

  void insert(std::uint64_t v) {
    while (v != 0) {
      const int hb = 63 - std::countl_zero(v);
      auto& slot = at[static_cast<std::size_t>(hb)];
      if (slot == 0) {
        slot = v;
        ++rank;
        return;
      }
      v ^= slot;
    }
  }

  std::vector<std::uint64_t> span_nonzero() const {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t b : at)
      if (b != 0) basis.push_back(b);
    std::vector<std::uint64_t> out;
    for (std::uint64_t combo = 1; combo < (std::uint64_t{1} << basis.size());
         ++combo) {
      std::uint64_t v = 0;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if ((combo >> k) & 1) v ^= basis[k];
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

}  // namespace

PauliElement identity_pauli(int width) {
  if (width < 1 || width > kMaxWidth)
    throw std::invalid_argument("Pauli width must be in 1..32");
  return PauliElement{0, 0, width};
}

PauliElement parse_pauli(std::string_view s) {
  if (s.empty() || s.size() > kMaxWidth)
    throw std::invalid_argument("Pauli string must have 1..32 letters");
  PauliElement e{0, 0, static_cast<int>(s.size())};
  for (std::size_t k = 0; k < s.size(); ++k) {
    switch (s[k]) {
      case 'I': break;
      case 'X': e.x |= std::uint64_t{1} << k; break;
      case 'Z': e.z |= std::uint64_t{1} << k; break;
      case 'Y':
        e.x |= std::uint64_t{1} << k;
        e.z |= std::uint64_t{1} << k;
        break;
      default:
        throw std::invalid_argument(std::string("illegal Pauli letter '") +
                                    s[k] + "'");
    }
  }
  return e;
}

std::string format_pauli(const PauliElement& e) {
  static constexpr char kLetter[4] = {'I', 'X', 'Z', 'Y'};
  std::string out(static_cast<std::size_t>(e.width), 'I');
  for (int k = 0; k < e.width; ++k)
    out[static_cast<std::size_t>(k)] = kLetter[qubit_code(e, k)];
  return out;
}

PauliElement mul(const PauliElement& a, const PauliElement& b) {
  require_same_width(a, b);
  return PauliElement{a.x ^ b.x, a.z ^ b.z, a.width};
}

SignedPauli mul_signed(const SignedPauli& a, const SignedPauli& b) {
  require_same_width(a.element, b.element);
  int exponent = a.phase_exponent + b.phase_exponent;
  for (int k = 0; k < a.element.width; ++k)
    exponent += kPhaseTable[qubit_code(a.element, k)][qubit_code(b.element, k)];
  return SignedPauli{mul(a.element, b.element), exponent & 3};
}

int symplectic_form(const PauliElement& a, const PauliElement& b) {
  require_same_width(a, b);
  return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
}

MagicSquareReport verify_magic_square(
    const std::array<std::array<PauliElement, 3>, 3>& grid) {
  MagicSquareReport report;
  const int width = grid[0][0].width;
  for (const auto& row : grid)
    for (const auto& e : row)
      if (e.width != width)
        throw std::invalid_argument("magic square entries have mixed widths");

  auto context = [&](int c) -> std::array<PauliElement, 3> {
    if (c < 3) return {grid[c][0], grid[c][1], grid[c][2]};
    return {grid[0][c - 3], grid[1][c - 3], grid[2][c - 3]};
  };
  auto context_name = [](int c) {
    return (c < 3 ? "row " + std::to_string(c + 1)
                  : "column " + std::to_string(c - 2));
  };

  int sign_product = 1;
  for (int c = 0; c < 6; ++c) {
    auto ops = context(c);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (symplectic_form(ops[i], ops[j]) != 0) {
          report.failure = context_name(c) + ": elements " +
                           format_pauli(ops[i]) + " and " + format_pauli(ops[j]) +
                           " anticommute";
          return report;
        }
    SignedPauli product{ops[0], 0};
    product = mul_signed(product, SignedPauli{ops[1], 0});
    product = mul_signed(product, SignedPauli{ops[2], 0});
    if (!product.element.is_identity() || (product.phase_exponent & 1) != 0) {
      report.failure =
          context_name(c) + " does not close to plus or minus identity";
      return report;
    }
    report.context_signs[static_cast<std::size_t>(c)] =
        product.phase_exponent == 0 ? 1 : -1;
    sign_product *= report.context_signs[static_cast<std::size_t>(c)];
  }
  report.is_magic = (sign_product == -1);
  return report;
}

std::vector<int> isotropic_lines(
    const std::vector<std::array<PauliElement, 3>>& lines) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    const auto& t = lines[static_cast<std::size_t>(i)];
    if (symplectic_form(t[0], t[1]) == 0 && symplectic_form(t[0], t[2]) == 0 &&
        symplectic_form(t[1], t[2]) == 0)
      out.push_back(i);
  }
  return out;
}

bool check_gq22(const std::vector<PauliElement>& points,
                const std::vector<std::array<PauliElement, 3>>& lines) {
  if (points.empty()) throw std::invalid_argument("no points");
  std::vector<std::array<int, 3>> line_idx;
  line_idx.reserve(lines.size());
  for (const auto& t : lines) {
    std::array<int, 3> idx{};
    for (int k = 0; k < 3; ++k) {
      auto it = std::find(points.begin(), points.end(), t[static_cast<std::size_t>(k)]);
      if (it == points.end())
        throw std::invalid_argument("line label is not among the points");
      idx[static_cast<std::size_t>(k)] =
          static_cast<int>(std::distance(points.begin(), it));
    }
    std::sort(idx.begin(), idx.end());
    if (idx[0] == idx[1] || idx[1] == idx[2])
      throw std::invalid_argument("line has repeated points");
    line_idx.push_back(idx);
  }

  const int p = static_cast<int>(points.size());
  std::vector<int> on_lines(static_cast<std::size_t>(p), 0);
  for (const auto& line : line_idx)
    for (int v : line) ++on_lines[static_cast<std::size_t>(v)];
  if (std::any_of(on_lines.begin(), on_lines.end(),
                  [](int d) { return d != 3; }))
    return false;  // not 3 lines per point, so not a GQ of order (2,2)

  if (p != 15 || line_idx.size() != 15)
    throw std::invalid_argument("expected 15 points and 15 lines");

  std::vector<std::vector<bool>> collinear(
      static_cast<std::size_t>(p), std::vector<bool>(static_cast<std::size_t>(p)));
  for (const auto& line : line_idx)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        collinear[static_cast<std::size_t>(line[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(line[static_cast<std::size_t>(j)])] = true;
      }

  for (int v = 0; v < p; ++v) {
    for (const auto& line : line_idx) {
      if (std::find(line.begin(), line.end(), v) != line.end()) continue;
      int seen = 0;
      for (int u : line)
        if (collinear[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
          ++seen;
      if (seen != 1) return false;
    }
  }
  return true;
}

SubgroupReport check_subgroup(const std::vector<PauliElement>& labels) {
  if (labels.empty()) throw std::invalid_argument("no labels");
  const int width = labels.front().width;
  for (const auto& e : labels)
    if (e.width != width)
      throw std::invalid_argument("labels have different widths");

  SubgroupReport report;

  std::unordered_set<std::uint64_t> have;
  have.insert(0);  // identity
  for (const auto& e : labels) have.insert(packed_xz(e));
  report.closed = true;
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (!have.contains(packed_xz(mul(a, b)))) {
        report.closed = false;
        break;
      }

  XorBasis basis;
  for (const auto& e : labels) basis.insert(packed_xz(e));
  report.rank = basis.rank;

  // Trivial radical: every nonzero span vector anticommutes with something.
  report.nondegenerate = true;
  auto span = basis.span_nonzero();
  const std::uint64_t low = (width == 64) ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << width) - 1;
  auto unpack = [&](std::uint64_t v) {
    return PauliElement{v & low, v >> width, width};
  };
  for (std::uint64_t v : span) {
    bool hit = false;
    for (std::uint64_t w : span)
      if (symplectic_form(unpack(v), unpack(w)) == 1) {
        hit = true;
        break;
      }
    if (!hit) {
      report.nondegenerate = false;
      break;
    }
  }
  return report;
}

}  // namespace veld
