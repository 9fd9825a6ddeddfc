#pragma once

#include "vaisman/exact/subspace.hpp"
#include "vaisman/hermitian/hermitian.hpp"

#include <optional>
#include <utility>

namespace vaisman::hermitian {

using exact::Subspace;

/// Kahler flat algebra with a unitary derivation.
struct KahlerFlatPackage {
  LieAlgebra k;
  Metric m;
  Matrix J;
  Matrix D;
};

/// Exact check of every package invariant.
Certificate check_package(const KahlerFlatPackage& p);

/// Double extension R A x_D k_omega(B) in the basis (A, B, k...), with
/// JA = B, J|k = J', |A| = |B| = 1 and A, B, k mutually orthogonal.
/// Throws std::invalid_argument when a package invariant fails; the
/// Vaisman verdict, unimodularity and solvability of the result are asserted.
HermitianData construct_vaisman(const KahlerFlatPackage& p);

/// Unit Lee vector after the rescale G -> |A|^2 G, its J-image, and the
/// orthogonal complement W of span{A, JA}. The W basis is the projection of
/// the input basis, keeping independent vectors in order.
struct LeeFrame {
  Rational scale;
  Metric metric;
  Vector A;
  Vector JA;
  std::vector<Vector> w;
  std::vector<std::string> w_labels;
};
/// Requires theta != 0 (std::invalid_argument otherwise).
LeeFrame lee_frame(const HermitianData& h, const LckVerdict& v);

struct VaismanReduction {
  KahlerFlatPackage package;
  /// |A|^2 of the input; the metric was multiplied by it.
  Rational scale;
  /// Unit Lee vector and JA in the input basis (after rescaling).
  Vector A;
  Vector JA;
  Subspace W;
  /// Columns (A, JA, W basis): the canonical basis of the input algebra.
  Matrix basis_change;
};

/// Inverse of construct_vaisman up to basis. Throws std::invalid_argument unless the input is
/// Vaisman, unimodular and solvable.
VaismanReduction reduce_vaisman(const HermitianData& h);

/// Nilradical and commutator predicted from the package by the case analysis
/// on u = z cap Jz, k' and ad(h), in the canonical basis (A, B, k...).
struct NilradicalPrediction {
  Subspace derived;
  Subspace nilradical;
  std::pair<std::size_t, std::size_t> profile;
  int case_index = 0;  // 1, 2, 3
};
NilradicalPrediction predict_nilradical(const KahlerFlatPackage& p);

struct SpectrumResult {
  bool pass = true;
  std::optional<Vector> witness;
  std::size_t tested = 0;
};

/// For each basis vector and `samples` random x (numerators in [-9, 9],
/// denominators in [1, 4]): char_poly(ad_x) = lambda^m r(lambda^2) with r
/// having only real nonpositive roots.
SpectrumResult spectrum_all_imaginary(const LieAlgebra& g, std::size_t samples, unsigned long long seed = 1);

/// The per-operator test used above.
bool spectrum_imaginary(const Matrix& ad);

}  // namespace vaisman::hermitian
