#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/exact/rational.hpp"
#include "vaisman/liealg/lie_algebra.hpp"

#include <cstddef>
#include <vector>

namespace vaisman::liealg {

using Multi = std::vector<std::size_t>;

/// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<Multi> increasing_tuples(std::size_t n, std::size_t k);

/// Alternating k-form on Q^n. Coefficients live on strictly increasing
/// index tuples; values on other tuples follow by antisymmetry.
class KForm {
 public:
  KForm() = default;
  KForm(std::size_t dim, std::size_t degree);

  /// The 1-form x -> <v, x> in coordinates (v as a row covector).
  static KForm covector(const Vector& v);
  static KForm dual_basis(std::size_t dim, std::size_t i);
  /// Degree-2 form with values b(e_i, e_j). Throws unless b is antisymmetric.
  static KForm from_matrix(const Matrix& b);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }

  /// Value on basis vectors in any order (sign from sorting; 0 on repeats).
  Rational on_basis(const Multi& idx) const;
  void set_on_basis(const Multi& idx, const Rational& value);
  /// Coefficient table indexed like increasing_tuples(dim, degree).
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const std::vector<Vector>& args) const;

  /// Degree 1: the coefficient vector.
  Vector as_vector() const;
  /// Degree 2: M(i, j) = alpha(e_i, e_j).
  Matrix as_matrix() const;

  bool is_zero() const;
  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  friend KForm operator*(const Rational& s, const KForm& a);
  bool operator==(const KForm& o) const = default;

  /// Pullback along a linear map: (f^* alpha)(x..) = alpha(f x, ..).
  /// f maps the new space (cols) into this form's space (rows).
  KForm pullback(const Matrix& f) const;

 private:
  std::size_t index_of(const Multi& sorted) const;

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<Rational> coeffs_;
};

/// Shuffle convention, no factorials:
/// (a ^ b)(x,y,z) = a(x)b(y,z) - a(y)b(x,z) + a(z)b(x,y) for degrees (1,2).
KForm wedge(const KForm& a, const KForm& b);

/// Chevalley-Eilenberg differential with trivial coefficients:
/// d a(x_0..x_k) = sum_{i<j} (-1)^{i+j} a([x_i,x_j], x_0..^i..^j..x_k).
KForm ce_differential(const LieAlgebra& g, const KForm& a);

}  // namespace vaisman::liealg
