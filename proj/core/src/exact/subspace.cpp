#include "vaisman/exact/subspace.hpp"

#include <stdexcept>

namespace vaisman::exact {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  Matrix m(spanning.size(), ambient_dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != ambient_dim) throw std::invalid_argument("subspace vector has wrong length");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = spanning[r][c];
  }
  std::vector<std::size_t> piv;
  Matrix red = m.rref(&piv);
  for (std::size_t r = 0; r < piv.size(); ++r) basis_.push_back(red.row(r));
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(unit_vector(n, i));
  return Subspace(n, v);
}

bool Subspace::contains(const Vector& v) const {
  std::vector<Vector> ext = basis_;
  ext.push_back(v);
  return Subspace(ambient_, ext).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const { return sum(other).dim() == dim(); }

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i = sum b_j w_j.
  const std::size_t p = dim(), q = other.dim();
  if (p == 0 || q == 0) return Subspace(ambient_);
  Matrix m(ambient_, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, p + j) = -other.basis_[j][r];
  std::vector<Vector> out;
  for (const auto& k : kernel_basis(m)) {
    Vector v = zero_vector(ambient_);
    for (std::size_t i = 0; i < p; ++i) v = v + k[i] * basis_[i];
    out.push_back(v);
  }
  return Subspace(ambient_, out);
}

Subspace Subspace::image_under(const Matrix& m) const {
  std::vector<Vector> out;
  for (const auto& b : basis_) out.push_back(m * b);
  return Subspace(m.rows(), out);
}

Subspace Subspace::orthogonal_complement(const Matrix& g) const {
  if (dim() == 0) return whole(ambient_);
  Matrix m(dim(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    Vector row = g.transpose() * basis_[r];
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = row[c];
  }
  return Subspace(ambient_, kernel_basis(m));
}

Matrix Subspace::as_columns() const { return Matrix::from_columns(basis_, ambient_); }

}  // namespace vaisman::exact
