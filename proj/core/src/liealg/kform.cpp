#include "vaisman/liealg/kform.hpp"

#include <algorithm>
#include <stdexcept>

namespace vaisman::liealg {

namespace {

/// Sorts idx in place and returns the permutation sign, or 0 on a repeat.
int sort_with_sign(Multi& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Multi> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<Multi> out;
  if (k > n) return out;
  Multi t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

KForm::KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree), coeffs_(binom(dim, degree), Rational(0)) {
  if (degree > dim) throw std::invalid_argument("form degree exceeds dimension");
}

KForm KForm::covector(const Vector& v) {
  KForm f(v.size(), 1);
  f.coeffs_ = v;
  return f;
}

KForm KForm::dual_basis(std::size_t dim, std::size_t i) { return covector(exact::unit_vector(dim, i)); }

KForm KForm::from_matrix(const Matrix& b) {
  if (!b.is_square()) throw std::invalid_argument("2-form matrix must be square");
  KForm f(b.rows(), 2);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i; j < b.cols(); ++j) {
      if (b(i, j) != -b(j, i)) throw std::invalid_argument("2-form matrix is not antisymmetric");
      if (i != j) f.set_on_basis({i, j}, b(i, j));
    }
  return f;
}

std::size_t KForm::index_of(const Multi& s) const {
  // Lexicographic rank of an increasing tuple.
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const std::size_t start = p == 0 ? 0 : prev + 1;
    for (std::size_t v = start; v < s[p]; ++v) rank += binom(dim_ - v - 1, degree_ - p - 1);
    prev = s[p];
  }
  return rank;
}

Rational KForm::on_basis(const Multi& idx) const {
  if (idx.size() != degree_) throw std::invalid_argument("wrong number of arguments for form");
  Multi s = idx;
  const int sign = sort_with_sign(s);
  if (sign == 0) return 0;
  const Rational& v = coeffs_[index_of(s)];
  return sign > 0 ? v : Rational(-v);
}

void KForm::set_on_basis(const Multi& idx, const Rational& value) {
  if (idx.size() != degree_) throw std::invalid_argument("wrong number of arguments for form");
  Multi s = idx;
  const int sign = sort_with_sign(s);
  if (sign == 0) {
    if (value != 0) throw std::invalid_argument("alternating form must vanish on repeated arguments");
    return;
  }
  coeffs_[index_of(s)] = sign > 0 ? value : Rational(-value);
}

Rational KForm::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != degree_) throw std::invalid_argument("wrong number of arguments for form");
  if (degree_ == 0) return coeffs_.empty() ? Rational(0) : coeffs_[0];
  const auto tuples = increasing_tuples(dim_, degree_);
  Rational total = 0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (coeffs_[t] == 0) continue;
    Matrix m(degree_, degree_);
    for (std::size_t a = 0; a < degree_; ++a)
      for (std::size_t b = 0; b < degree_; ++b) m(a, b) = args[a][tuples[t][b]];
    total += coeffs_[t] * m.determinant();
  }
  return total;
}

Vector KForm::as_vector() const {
  if (degree_ != 1) throw std::logic_error("as_vector requires a 1-form");
  return coeffs_;
}

Matrix KForm::as_matrix() const {
  if (degree_ != 2) throw std::logic_error("as_matrix requires a 2-form");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = on_basis({i, j});
  return m;
}

bool KForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

KForm KForm::operator+(const KForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw std::invalid_argument("form shape mismatch");
  KForm r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

KForm KForm::operator-() const {
  KForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm operator*(const Rational& s, const KForm& a) {
  KForm r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

KForm KForm::pullback(const Matrix& f) const {
  if (f.rows() != dim_) throw std::invalid_argument("pullback map has wrong target dimension");
  KForm r(f.cols(), degree_);
  const auto tuples = increasing_tuples(f.cols(), degree_);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::vector<Vector> args;
    for (auto i : tuples[t]) args.push_back(f.column(i));
    r.coeffs_[t] = evaluate(args);
  }
  return r;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge of forms on different spaces");
  const std::size_t p = a.degree(), q = b.degree(), n = a.dim();
  if (p + q > n) throw std::invalid_argument("wedge degree exceeds dimension");
  KForm r(n, p + q);
  const auto tuples = increasing_tuples(n, p + q);
  const auto shuffles = increasing_tuples(p + q, p);
  for (const auto& t : tuples) {
    Rational v = 0;
    for (const auto& s : shuffles) {
      Multi left, right, perm;
      std::vector<bool> in_s(p + q, false);
      for (auto i : s) in_s[i] = true;
      for (std::size_t i = 0; i < p + q; ++i) {
        if (in_s[i]) {
          left.push_back(t[i]);
          perm.push_back(i);
        }
      }
      for (std::size_t i = 0; i < p + q; ++i) {
        if (!in_s[i]) {
          right.push_back(t[i]);
          perm.push_back(i);
        }
      }
      const int sign = sort_with_sign(perm);
      const Rational av = p ? a.on_basis(left) : a.coefficients().at(0);
      const Rational bv = q ? b.on_basis(right) : b.coefficients().at(0);
      if (sign > 0)
        v += av * bv;
      else
        v -= av * bv;
    }
    r.set_on_basis(t, v);
  }
  return r;
}

KForm ce_differential(const LieAlgebra& g, const KForm& a) {
  const std::size_t n = g.dim(), k = a.degree();
  if (a.dim() != n) throw std::invalid_argument("form and algebra dimensions differ");
  if (k + 1 > n) throw std::invalid_argument("differential would exceed top degree");
  KForm r(n, k + 1);
  for (const auto& t : increasing_tuples(n, k + 1)) {
    Rational v = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        Multi rest;
        for (std::size_t l = 0; l < t.size(); ++l)
          if (l != i && l != j) rest.push_back(t[l]);
        const bool negative = (i + j) % 2 == 1;
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& c = g.c(t[i], t[j], m);
          if (c == 0) continue;
          Multi args{m};
          args.insert(args.end(), rest.begin(), rest.end());
          const Rational term = c * a.on_basis(args);
          if (negative)
            v -= term;
          else
            v += term;
        }
      }
    r.set_on_basis(t, v);
  }
  return r;
}

}  // namespace vaisman::liealg
