#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/exact/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace vaisman::exact {

/// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  Matrix to_rational() const;
  /// Row-wise scaling by common denominators; the row space and rank are preserved.
  static IntMatrix clear_denominators(const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  /// d1 | d2 | ... | d_rank, all positive.
  std::vector<Integer> factors;
  std::size_t rank = 0;
};

/// Invariant factors by elementary row/column reduction, pivoting on the
/// entry of smallest absolute value.
SmithForm smith_normal_form(IntMatrix m);

}  // namespace vaisman::exact
