#pragma once

#include "vaisman/exact/subspace.hpp"
#include "vaisman/metricgeo/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vaisman::metricgeo {

using exact::Subspace;

/// Orthogonal splitting k = z + h + k' of a flat metric Lie algebra.
struct FlatDecomposition {
  Subspace z;
  Subspace h;
  Subspace kprime;
  /// z intersected with J z; filled by the hermitian layer.
  std::optional<Subspace> u;
};

/// Throws std::invalid_argument when (g, m) is not flat. Every structural
/// property of the splitting is verified; a failure raises std::logic_error.
FlatDecomposition flat_decomposition(const LieAlgebra& g, const Metric& m);

/// Names of the properties verified by flat_decomposition, with outcomes.
struct FlatPropertyCheck {
  std::string name;
  bool pass = false;
};
std::vector<FlatPropertyCheck> flat_properties(const LieAlgebra& g, const Metric& m, const FlatDecomposition& fd);

/// Restriction of an endomorphism T that preserves the subspace S, in the
/// basis S.basis(). Throws std::invalid_argument when S is not invariant.
Matrix restrict_to(const Matrix& t, const Subspace& s);

/// Simultaneous 2x2 block form of commuting skew operators (floating point).
struct AdaptedBlockBasis {
  /// Orthonormal e_1, f_1, ..., e_n, f_n in ambient coordinates.
  std::vector<std::vector<double>> vectors;
  /// params[o][i] = <T_o e_i, f_i> for the o-th supplied operator.
  std::vector<std::vector<double>> params;
  /// lambdas[i][j] = lambda_i(H_j) over the h basis (decomposition variant only).
  std::vector<std::vector<double>> lambdas;
  double residual = 0.0;
};

/// Operators must preserve `space`, commute there and be skew for m
/// (checked exactly; std::invalid_argument otherwise).
AdaptedBlockBasis adapted_block_basis(const Metric& m, const Subspace& space, const std::vector<Matrix>& operators,
                                      double tolerance = 1e-9, unsigned seed = 7);

/// Block form on k' for J, D and ad(h). Also asserts exactly that no lambda_i
/// vanishes (ad(h) has no common kernel on k') and that ad: h -> End(k') is
/// injective.
AdaptedBlockBasis adapted_block_basis(const LieAlgebra& g, const Metric& m, const FlatDecomposition& fd,
                                      const std::vector<Matrix>& operators, double tolerance = 1e-9, unsigned seed = 7);

}  // namespace vaisman::metricgeo
