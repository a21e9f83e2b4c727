#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "veldkamp/pauli.hpp"

using namespace veld;

TEST_CASE("parse and format") {
  auto xi = parse_pauli("XI");
  CHECK(xi.x == 0b01);
  CHECK(xi.z == 0b00);
  auto yy = parse_pauli("YY");
  CHECK(yy.x == 0b11);
  CHECK(yy.z == 0b11);
  auto zii = parse_pauli("ZII");
  CHECK(zii.x == 0b000);
  CHECK(zii.z == 0b001);

  for (const char* s : {"XI", "YY", "ZII", "IXYZ", "I"})
    CHECK(format_pauli(parse_pauli(s)) == s);

  CHECK_THROWS_AS(parse_pauli("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
}

TEST_CASE("phase-free product") {
  CHECK(format_pauli(mul(parse_pauli("XI"), parse_pauli("YY"))) == "ZY");
  CHECK_THROWS_AS(mul(parse_pauli("XI"), parse_pauli("X")), std::invalid_argument);

  for (const auto& e : oracle::all_nonidentity(2))
    CHECK(mul(e, e).is_identity());

  // The five n=4 vertex labels multiply to the identity.
  PauliElement product = identity_pauli(2);
  for (const char* s : {"XI", "IX", "YY", "ZI", "IZ"})
    product = mul(product, parse_pauli(s));
  CHECK(product.is_identity());
}

TEST_CASE("signed product on single qubits") {
  auto x = SignedPauli{parse_pauli("X"), 0};
  auto y = SignedPauli{parse_pauli("Y"), 0};
  auto xy = mul_signed(x, y);
  CHECK(format_pauli(xy.element) == "Z");
  CHECK(xy.phase_exponent == 1);  // XY = iZ
  auto yx = mul_signed(y, x);
  CHECK(yx.phase_exponent == 3);  // YX = -iZ

  auto e = SignedPauli{parse_pauli("XZ"), 2};
  auto id = SignedPauli{identity_pauli(2), 0};
  auto same = mul_signed(e, id);
  CHECK(same.element == e.element);
  CHECK(same.phase_exponent == 2);
}

TEST_CASE("signed product matches the matrix oracle exhaustively") {
  for (int width : {1, 2, 3}) {
    auto elements = oracle::all_nonidentity(width);
    elements.push_back(identity_pauli(width));
    long long checked = 0;
    for (const auto& a : elements)
      for (const auto& b : elements) {
        auto product = mul_signed(SignedPauli{a, 0}, SignedPauli{b, 0});
        auto expected = oracle::matmul(oracle::matrix_of(a), oracle::matrix_of(b));
        auto got = oracle::scaled(oracle::i_power(product.phase_exponent),
                                  oracle::matrix_of(product.element));
        if (!oracle::approx_equal(expected, got)) {
          FAIL_CHECK("mismatch for " << format_pauli(a) << " * "
                                     << format_pauli(b));
        }
        ++checked;
      }
    CHECK(checked == (1LL << (2 * width)) * (1LL << (2 * width)));
  }
}

TEST_CASE("symplectic form matches commutation of matrices") {
  CHECK(symplectic_form(parse_pauli("XI"), parse_pauli("IX")) == 0);
  CHECK(symplectic_form(parse_pauli("XI"), parse_pauli("ZI")) == 1);
  CHECK(symplectic_form(parse_pauli("XX"), parse_pauli("ZZ")) == 0);

  for (int width : {2, 3}) {
    for (const auto& a : oracle::all_nonidentity(width))
      for (const auto& b : oracle::all_nonidentity(width)) {
        auto ab = oracle::matmul(oracle::matrix_of(a), oracle::matrix_of(b));
        auto ba = oracle::matmul(oracle::matrix_of(b), oracle::matrix_of(a));
        const bool commute = oracle::approx_equal(ab, ba);
        CHECK(symplectic_form(a, b) == (commute ? 0 : 1));
      }
  }
}

TEST_CASE("signed product is associative") {
  auto elements = oracle::all_nonidentity(2);
  for (const auto& a : elements)
    for (const auto& b : elements)
      for (const auto& c : elements) {
        auto left = mul_signed(mul_signed({a, 0}, {b, 0}), {c, 0});
        auto right = mul_signed({a, 0}, mul_signed({b, 0}, {c, 0}));
        CHECK(left.element == right.element);
        CHECK(left.phase_exponent == right.phase_exponent);
      }
}

TEST_CASE("group size") {
  CHECK(oracle::all_nonidentity(1).size() == 3);
  CHECK(oracle::all_nonidentity(2).size() == 15);
  CHECK(oracle::all_nonidentity(3).size() == 63);
}

TEST_CASE("magic square verification") {
  auto grid_of = [](std::array<std::array<const char*, 3>, 3> names) {
    std::array<std::array<PauliElement, 3>, 3> grid;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) grid[i][j] = parse_pauli(names[i][j]);
    return grid;
  };

  // The classic square: all rows +1, the last column -1.
  auto report = verify_magic_square(grid_of(
      {{{"XI", "IX", "XX"}, {"IZ", "ZI", "ZZ"}, {"XZ", "ZX", "YY"}}}));
  REQUIRE_FALSE(report.failure.has_value());
  CHECK(report.is_magic);
  CHECK(report.context_signs == std::array<int, 6>{1, 1, 1, 1, 1, -1});

  // All-identity grid: every context closes with sign +1; not magic.
  auto trivial = verify_magic_square(grid_of(
      {{{"II", "II", "II"}, {"II", "II", "II"}, {"II", "II", "II"}}}));
  REQUIRE_FALSE(trivial.failure.has_value());
  CHECK_FALSE(trivial.is_magic);
  for (int s : trivial.context_signs) CHECK(s == 1);

  // An anticommuting pair in row 1 is reported by name.
  auto broken = verify_magic_square(grid_of(
      {{{"XI", "ZI", "YI"}, {"IZ", "ZI", "ZZ"}, {"XZ", "ZX", "YY"}}}));
  REQUIRE(broken.failure.has_value());
  CHECK(broken.failure->find("row 1") != std::string::npos);
  CHECK_FALSE(broken.is_magic);
}

TEST_CASE("isotropic line filter") {
  std::vector<std::array<PauliElement, 3>> lines = {
      {parse_pauli("XI"), parse_pauli("ZI"), parse_pauli("YI")},  // anticommuting
      {parse_pauli("II"), parse_pauli("XX"), parse_pauli("XX")},  // commuting
      {parse_pauli("XX"), parse_pauli("YY"), parse_pauli("ZZ")},  // commuting
  };
  CHECK(isotropic_lines(lines) == std::vector<int>{1, 2});
}

TEST_CASE("GQ(2,2) check") {
  // A projective plane of order two passes the regularity gate but has the
  // wrong cardinality.
  {
    std::vector<PauliElement> points = oracle::all_nonidentity(3);
    points.resize(7);
    std::vector<std::array<PauliElement, 3>> lines;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = i + 1; j < 7; ++j)
        for (std::size_t k = j + 1; k < 7; ++k) {
          // Fano lines via XOR closure on the packed codes 1..7.
          auto code = [&](std::size_t t) { return static_cast<int>(t) + 1; };
          if ((code(i) ^ code(j) ^ code(k)) == 0)
            lines.push_back({points[i], points[j], points[k]});
        }
    // Points indexed by code 1..7 with XOR lines: 7 points, 7 lines, all of
    // degree 3.
    REQUIRE(lines.size() == 7);
    std::vector<PauliElement> plane_points(points.begin(), points.begin() + 7);
    CHECK_THROWS_AS(check_gq22(plane_points, lines), std::invalid_argument);
  }

  // A 3x3 grid is a generalized quadrangle of order (2,1), not (2,2): the
  // degree gate fails and the verdict is false.
  {
    std::vector<PauliElement> points;
    std::vector<std::array<PauliElement, 3>> lines;
    const char* grid[3][3] = {{"XI", "IX", "XX"}, {"IZ", "ZI", "ZZ"}, {"XZ", "ZX", "YY"}};
    for (auto& row : grid)
      for (auto* name : row) points.push_back(parse_pauli(name));
    for (int i = 0; i < 3; ++i) {
      lines.push_back({parse_pauli(grid[i][0]), parse_pauli(grid[i][1]),
                       parse_pauli(grid[i][2])});
      lines.push_back({parse_pauli(grid[0][i]), parse_pauli(grid[1][i]),
                       parse_pauli(grid[2][i])});
    }
    CHECK_FALSE(check_gq22(points, lines));
  }
}

TEST_CASE("subgroup check") {
  {
    auto report = check_subgroup({parse_pauli("XI"), parse_pauli("ZI")});
    CHECK_FALSE(report.closed);  // YI missing
  }
  {
    auto report = check_subgroup(oracle::all_nonidentity(2));
    CHECK(report.closed);
    CHECK(report.rank == 4);
    CHECK(report.nondegenerate);
  }
  {
    // {II-free} span of XI alone: closed, rank 1, degenerate (XI commutes
    // with everything in its span).
    auto report = check_subgroup({parse_pauli("XI")});
    CHECK(report.closed);
    CHECK(report.rank == 1);
    CHECK_FALSE(report.nondegenerate);
  }
}
