#include "vaisman/exact/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace vaisman::exact {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r -= o;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (b != 0) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0 && v[k] != 0) r[i] += (*this)(i, k) * v[k];
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != lead)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols_; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(lead, j);
    }
    piv.push_back(c);
    ++lead;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Rational Matrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> piv;
  Matrix red = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  std::vector<std::size_t> piv;
  Matrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vector x = zero_vector(cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, cols_);
  return x;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Matrix m(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  return m;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix red = m.rref(&piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& m, unsigned k) {
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace vaisman::exact
