#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/exact/rational.hpp"

#include <utility>
#include <vector>

namespace vaisman::exact {

/// Linear subspace of Q^n, stored as the rows of a reduced echelon matrix.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);
  /// Span of arbitrary (possibly dependent) vectors.
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  /// Canonical echelon basis.
  const std::vector<Vector>& basis() const& { return basis_; }
  /// By value on temporaries, so range-for over sum(...).basis() is safe.
  std::vector<Vector> basis() && { return std::move(basis_); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const { return ambient_ == other.ambient_ && basis_ == other.basis_; }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image of the subspace under a linear map.
  Subspace image_under(const Matrix& m) const;
  /// Orthogonal complement with respect to the symmetric form g.
  Subspace orthogonal_complement(const Matrix& g) const;

  /// Matrix whose columns are the basis vectors.
  Matrix as_columns() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

}  // namespace vaisman::exact
