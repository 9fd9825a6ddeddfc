#include "vaisman/exact/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vaisman::exact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0)
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix IntMatrix::to_rational() const {
  Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = Rational((*this)(r, c));
  return m;
}

IntMatrix IntMatrix::clear_denominators(const Matrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Integer d = common_denominator(m.row(r));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational scaled = m(r, c) * Rational(d);
      out(r, c) = scaled.get_num();
    }
  }
  return out;
}

namespace {

// Rows (or columns) i, j of m become x i + y j and (-b/g) i + (a/g) j, where
// a, b are the entries being combined and g = gcd(a, b) = x a + y b. The
// transform has determinant 1, so it is unimodular, and it zeroes b.
struct Bezout {
  Integer g, x, y, a_g, b_g;
  Bezout(const Integer& a, const Integer& b) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a_g = a / g;
    b_g = b / g;
  }
  void apply(Integer& u, Integer& v) const {
    Integer nu = x * u + y * v;
    Integer nv = a_g * v - b_g * u;
    u = std::move(nu);
    v = std::move(nv);
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of smallest absolute value in the trailing block.
    bool found = false;
    std::size_t pr = 0, pc = 0;
    Integer best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m(r, c) != 0 && (!found || abs(m(r, c)) < best)) {
          found = true;
          best = abs(m(r, c));
          pr = r;
          pc = c;
        }
    if (!found) break;
    if (pr != t)
      for (std::size_t c = t; c < cols; ++c) std::swap(m(pr, c), m(t, c));
    if (pc != t)
      for (std::size_t r = t; r < rows; ++r) std::swap(m(r, pc), m(r, t));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        if (m(r, t) % m(t, t) == 0) {
          const Integer q = m(r, t) / m(t, t);
          for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
          continue;
        }
        const Bezout b(m(t, t), m(r, t));
        for (std::size_t c = t; c < cols; ++c) b.apply(m(t, c), m(r, c));
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        if (m(t, c) % m(t, t) == 0) {
          const Integer q = m(t, c) / m(t, t);
          for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
          continue;
        }
        const Bezout b(m(t, t), m(t, c));
        for (std::size_t r = t; r < rows; ++r) b.apply(m(r, t), m(r, c));
        clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) m(t, cc) += m(r, cc);
            clean = false;
            break;
          }
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  SmithForm out;
  out.rank = diag.size();
  out.factors = std::move(diag);
  return out;
}

}  // namespace vaisman::exact
