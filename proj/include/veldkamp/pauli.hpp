#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace veld {

// A phase-free N-qubit Pauli group element as a pair of GF(2) bit vectors.
// Qubit k carries I/X/Y/Z for (x_k, z_k) = (0,0)/(1,0)/(1,1)/(0,1); the
// all-zero pair is the identity. Width is limited to 32 qubits.
struct PauliElement {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int width = 0;

  bool is_identity() const { return x == 0 && z == 0; }

  friend bool operator==(const PauliElement&, const PauliElement&) = default;
  friend auto operator<=>(const PauliElement&, const PauliElement&) = default;
};

// A Pauli element together with a global phase i^alpha, alpha in 0..3.
struct SignedPauli {
  PauliElement element;
  int phase_exponent = 0;
};

PauliElement identity_pauli(int width);

// String syntax "XYZI...", one letter per qubit, leftmost letter = qubit 0.
PauliElement parse_pauli(std::string_view s);
std::string format_pauli(const PauliElement& e);

// Phase-free product: componentwise XOR. Throws on width mismatch.
PauliElement mul(const PauliElement& a, const PauliElement& b);

// Sign-tracked product using the per-qubit phase table (X*Y = iZ and cyclic,
// reversed order contributes -i).
SignedPauli mul_signed(const SignedPauli& a, const SignedPauli& b);

// <a,b> = sum_k (a.x_k b.z_k + a.z_k b.x_k) mod 2; zero iff the operators
// commute.
int symplectic_form(const PauliElement& a, const PauliElement& b);

// Verdict for a 3x3 grid of equal-width elements. The six contexts (rows then
// columns) must each be mutually commuting with signed product +-identity;
// magic additionally requires the six signs to multiply to -1. A context
// failure is reported by name instead of throwing.
struct MagicSquareReport {
  std::array<int, 6> context_signs{};  // rows 0..2, then columns 0..2
  bool is_magic = false;
  std::optional<std::string> failure;
};

MagicSquareReport verify_magic_square(
    const std::array<std::array<PauliElement, 3>, 3>& grid);

// Indices of the triples whose three labels pairwise commute.
std::vector<int> isotropic_lines(
    const std::vector<std::array<PauliElement, 3>>& lines);

// Generalized-quadrangle GQ(2,2) certification of a 15-point, 15-line label
// structure. Inputs failing the every-point-on-3-lines count return false;
// inputs with the right regularity but wrong cardinalities throw
// std::invalid_argument.
bool check_gq22(const std::vector<PauliElement>& points,
                const std::vector<std::array<PauliElement, 3>>& lines);

// Closure under the phase-free product, GF(2) rank of the (x|z) vectors, and
// nondegeneracy of the symplectic form restricted to their span.
struct SubgroupReport {
  bool closed = false;
  int rank = 0;
  bool nondegenerate = false;
};

SubgroupReport check_subgroup(const std::vector<PauliElement>& labels);

}  // namespace veld
