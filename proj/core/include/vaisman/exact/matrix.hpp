#pragma once

#include "vaisman/exact/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace vaisman::exact {

/// Dense rational matrix, row-major storage.
///
/// Linear maps act on column vectors: column j holds the image of the j-th
/// basis vector. Every operator in the library (ad_x, J, D, phi, G) follows
/// this convention.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix diagonal(const Vector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  bool operator==(const Matrix& other) const = default;

  std::size_t rank() const;
  Rational determinant() const;
  /// Throws std::domain_error when singular.
  Matrix inverse() const;
  /// Some x with (*this) x = b, if one exists.
  std::optional<Vector> solve(const Vector& b) const;

  /// Reduced row echelon form; pivot columns returned through the out-param.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  /// Matrix restricted to rows/cols index sets.
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of the null space {x : m x = 0}. Exact; empty when m is injective.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// m^k for k >= 0.
Matrix power(const Matrix& m, unsigned k);

}  // namespace vaisman::exact
