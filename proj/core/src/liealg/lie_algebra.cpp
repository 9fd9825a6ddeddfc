#include "vaisman/liealg/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace vaisman::liealg {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("e" + std::to_string(i + 1));
  return l;
}

std::string vec_str(const Vector& v) { return exact::to_string(v); }

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(labels.empty() ? default_labels(dim) : std::move(labels)), c_(dim * dim * dim, Rational(0)) {
  if (labels_.size() != dim_) throw std::invalid_argument("label count does not match dimension");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim); }

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw std::invalid_argument("label count does not match dimension");
  labels_ = std::move(labels);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw std::invalid_argument("bracket index or length out of range");
  if (i == j) {
    if (!exact::is_zero(v)) throw std::invalid_argument("[x,x] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    at(i, j, k) = v[k];
    at(j, i, k) = -v[k];
  }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket argument length mismatch");
  Vector r = exact::zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) r[k] += s * c(i, j, k);
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) m(k, j) += x[i] * c(i, j, k);
    }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(exact::unit_vector(dim_, i)); }

LieAlgebra LieAlgebra::change_basis(const Matrix& p, std::vector<std::string> labels) const {
  if (p.rows() != dim_ || p.cols() != dim_) throw std::invalid_argument("change of basis shape mismatch");
  const Matrix pinv = p.inverse();
  LieAlgebra out(dim_, labels.empty() ? labels_ : std::move(labels));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) out.set_bracket(i, j, pinv * bracket(p.column(i), p.column(j)));
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Validation validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto& lab = g.labels();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          return {false, "antisymmetry fails at (" + lab[i] + ", " + lab[j] + ")"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = exact::unit_vector(n, i), ej = exact::unit_vector(n, j), ek = exact::unit_vector(n, k);
        Vector s = g.bracket(g.bracket_basis(i, j), ek) + g.bracket(g.bracket_basis(j, k), ei) +
                   g.bracket(g.bracket_basis(k, i), ej);
        if (!exact::is_zero(s))
          return {false, "Jacobi fails at (" + lab[i] + ", " + lab[j] + ", " + lab[k] + "): " + vec_str(s)};
      }
  return {};
}

Validation check_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) return {false, "derivation has wrong shape"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d * g.bracket_basis(i, j);
      const Vector rhs = g.bracket(d.column(i), exact::unit_vector(n, j)) + g.bracket(exact::unit_vector(n, i), d.column(j));
      if (lhs != rhs)
        return {false, "Leibniz rule fails at (" + g.labels()[i] + ", " + g.labels()[j] + ")"};
    }
  return {};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> lab = a.labels();
  lab.insert(lab.end(), b.labels().begin(), b.labels().end());
  const std::size_t n = a.dim() + b.dim();
  LieAlgebra out(n, lab);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector v = exact::zero_vector(n);
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.c(i, j, k);
      out.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector v = exact::zero_vector(n);
      for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.c(i, j, k);
      out.set_bracket(a.dim() + i, a.dim() + j, v);
    }
  return out;
}

LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> labels) {
  const std::size_t m = basis.size();
  const Matrix p = Matrix::from_columns(basis, g.dim());
  if (p.rank() != m) throw std::invalid_argument("subalgebra basis is not independent");
  LieAlgebra out(m, std::move(labels));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto coords = p.solve(g.bracket(basis[i], basis[j]));
      if (!coords) throw std::invalid_argument("subspace is not closed under the bracket");
      out.set_bracket(i, j, *coords);
    }
  return out;
}

}  // namespace vaisman::liealg
