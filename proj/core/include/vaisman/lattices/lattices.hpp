#pragma once

#include "vaisman/certificate.hpp"
#include "vaisman/exact/smith.hpp"
#include "vaisman/hermitian/hermitian.hpp"

#include <string>
#include <vector>

namespace vaisman::lattices {

using exact::Integer;
using exact::IntMatrix;
using exact::Rational;

/// Rotation speeds of an oscillator algebra, integral with gcd 1, sorted, and
/// with the overall sign fixed so that the sorted tuple beats its negative
/// lexicographically.
struct OscillatorParams {
  std::vector<Integer> a;
  /// Input before normalization.
  std::vector<Rational> original;
  bool operator==(const OscillatorParams& o) const { return a == o.a; }
};

/// Clears denominators, divides by the gcd, sorts and fixes the sign.
/// Throws std::invalid_argument on an empty or all-zero list.
OscillatorParams normalize(const std::vector<Rational>& a);

/// Rotation angle m * pi/2.
struct QuarterTurn {
  int m = 4;
};

/// g_(a) = R A x_D h_{2n+1} with its Vaisman structure, basis (A, B, e_1, f_1, ...).
hermitian::HermitianData oscillator_algebra(const OscillatorParams& p);

bool oscillator_isomorphic(const OscillatorParams& p, const OscillatorParams& q);

/// exp(t D) at t = m pi/2 on coordinates (z, x_1, y_1, ..., x_n, y_n).
IntMatrix rotation_matrix(const std::vector<Integer>& a, QuarterTurn t);
inline IntMatrix rotation_matrix(const OscillatorParams& p, QuarterTurn t) { return rotation_matrix(p.a, t); }

/// Generators g_0..g_{N-1} of an iterated semidirect product of Z's with a
/// discrete Heisenberg group. Each level is the conjugation action of one
/// generator, stored as an N x N integer matrix on generator coordinates.
/// Central corrections in conjugation relations are not recorded; they die
/// in the abelianization.
struct LatticePresentation {
  struct Pairing {
    std::size_t x, y, center;
    /// [g_x, g_y] = g_center^exponent.
    Integer exponent;
  };
  struct Level {
    std::size_t generator;
    IntMatrix action;
  };
  std::vector<std::string> generators;
  std::vector<Pairing> pairings;
  std::vector<Level> levels;
  /// Extra relations, as exponent rows over the generators.
  std::vector<std::vector<Integer>> relations;
};

/// Gamma_k in H_{2n+1}: generators (z, x_1, y_1, ...), [x_i, y_i] = z^{2k}.
LatticePresentation heisenberg_lattice(std::size_t n, const Integer& k);

/// Lambda_{k,j} = j Z x_phi Gamma_k, generators (t, z, x_1, y_1, ...).
/// Throws std::invalid_argument for k < 1 or an all-zero a.
LatticePresentation lattice_presentation_oscillator(const std::vector<Integer>& a, const Integer& k, QuarterTurn t);
inline LatticePresentation lattice_presentation_oscillator(const OscillatorParams& p, const Integer& k, QuarterTurn t) {
  return lattice_presentation_oscillator(p.a, k, t);
}

/// Lambda_{k,j,i} = i Z x_phi (j Z x_psi (j^{-1} Z x Gamma_k)), generators
/// (r, s, Zg, z, e/f pairs (l), u/v pairs (m)). Level s: shear Zg -> Zg + z^{2k}
/// and the a-rotations of the u/v planes; level r: alpha-rotations of all l + m planes.
/// Throws std::invalid_argument on size mismatch, zero a_j or k < 1.
LatticePresentation lattice_presentation_tower(std::size_t l, std::size_t m, const std::vector<Integer>& a,
                                               const std::vector<Integer>& alpha, const Integer& k, QuarterTurn j,
                                               QuarterTurn i);

/// Integrality and invertibility of every action, preservation of the
/// pairing, and commutation of the levels.
Certificate validate(const LatticePresentation& lp);

struct AbelianGroup {
  std::size_t rank = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion;
  bool operator==(const AbelianGroup& o) const = default;
};

/// The group Z^free + sum Z_{orders}, put in invariant factor form.
AbelianGroup abelian_group(std::size_t free, const std::vector<Integer>& orders);

/// Relation matrix over the generators: pairing rows, extra relations and
/// (A - I) rows for every level; the invariant factors come from Smith form.
IntMatrix relation_matrix(const LatticePresentation& lp);
AbelianGroup abelianization(const LatticePresentation& lp);
inline std::size_t betti1(const AbelianGroup& g) { return g.rank; }

/// "Z^3 + Z_2 + Z_4"; "0" for the trivial group.
std::string to_string(const AbelianGroup& g);

/// The closed forms for Lambda_{k,j} with m in {1, 2, 4}: free case
/// Z^{2n+1} + Z_2k; half turn Z + Z_2k + Z^{2p} + Z_2^{2(n-p)} (p even a_j);
/// quarter turn Z + Z_2k + Z^{2c} + Z_2^{2d} + Z_2^{n-c-d} (c entries = 0, d = 2 mod 4).
/// Throws std::invalid_argument for other m or when every a_j is even.
AbelianGroup oscillator_h1_closed_form(const std::vector<Integer>& a, const Integer& k, QuarterTurn t);

/// One row of a dim-6 H_1 table.
struct TableRow {
  std::string residue;
  /// Expected group as a closed form in k, e.g. "Z + Z_2k + Z_2^4".
  std::string expected;
  std::size_t b1 = 0;
  /// Abelianization for each k (the same on every representative of the row).
  std::vector<AbelianGroup> computed;
  bool matches = true;
};

struct H1Table {
  QuarterTurn turn;
  std::vector<Integer> ks;
  std::vector<TableRow> rows;
};

/// The dim-6 tables for G_(a,b), m in {1, 2}: every residue pair (a, b) mod 4/m
/// not both even is abelianized for each k and checked against the table row.
H1Table dim6_table(QuarterTurn t, const std::vector<Integer>& ks = {1, 2, 3});
std::string render(const H1Table& t);

}  // namespace vaisman::lattices
