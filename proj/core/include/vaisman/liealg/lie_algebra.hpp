#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/exact/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vaisman::liealg {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using exact::operator+;
using exact::operator-;
using exact::operator*;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// set_bracket keeps the table antisymmetric; the Jacobi identity is not
/// enforced on construction, call validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v. Throws if i == j and v != 0.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// ad_x as a matrix: column j is [x, e_j].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// Algebra expressed in the basis given by the columns of p (invertible).
  LieAlgebra change_basis(const Matrix& p, std::vector<std::string> labels = {}) const;

  bool is_abelian() const;
  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

struct Validation {
  bool ok = true;
  std::string violation;
};

/// Exact antisymmetry and Jacobi check over all basis triples.
Validation validate(const LieAlgebra& g);

/// Leibniz rule D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
Validation check_derivation(const LieAlgebra& g, const Matrix& d);
inline bool is_derivation(const LieAlgebra& g, const Matrix& d) { return check_derivation(g, d).ok; }

/// Direct sum g1 + g2 with basis (g1, g2).
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants of the subalgebra spanned by `basis` (columns), which
/// must be closed under the bracket. Throws std::invalid_argument otherwise.
LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> labels = {});

}  // namespace vaisman::liealg
