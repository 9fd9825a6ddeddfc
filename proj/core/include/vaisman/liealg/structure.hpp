#pragma once

#include "vaisman/exact/subspace.hpp"
#include "vaisman/liealg/lie_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vaisman::liealg {

using exact::Subspace;

/// Raised when an operation is outside the supported class of inputs.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StructureReport {
  Subspace center;
  Subspace derived;
  std::vector<Subspace> derived_series;
  std::vector<Subspace> lower_central_series;
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  /// Present for solvable algebras.
  std::optional<Subspace> nilradical;
  /// (p, q) when the nilradical is R^p x h_{2q+1}.
  std::optional<std::pair<std::size_t, std::size_t>> heisenberg_profile;
};

Subspace center(const LieAlgebra& g);
/// [U, V] as a subspace.
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);
Subspace derived_algebra(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// Nilradical of a solvable algebra: x with ad_x in the radical of the trace
/// form of the associative algebra generated by ad(g). Throws Unsupported
/// when g is not solvable.
Subspace nilradical(const LieAlgebra& g);

/// Basis of the associative (non-unital) algebra generated by ad(e_i).
std::vector<Matrix> associative_closure(const std::vector<Matrix>& generators);

/// Profile of a nilpotent algebra: (p, q) iff n' is one-dimensional and central.
std::optional<std::pair<std::size_t, std::size_t>> heisenberg_profile(const LieAlgebra& n);

StructureReport analyze(const LieAlgebra& g);

}  // namespace vaisman::liealg
