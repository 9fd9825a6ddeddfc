#include "vaisman/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vaisman::exact {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  Matrix acc = Matrix::zero(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * (*this);
}

Polynomial Polynomial::reflect() const {
  std::vector<Rational> v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational lead_inv = 1 / divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::size_t Polynomial::zero_multiplicity() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return is_zero() ? 0 : k;
}

Polynomial Polynomial::shift_down(std::size_t k) const {
  if (k >= coeffs_.size()) return {};
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw std::domain_error("shift_down: polynomial not divisible by x^k");
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << exact::to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of the zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(1);
  Polynomial g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Rational inv = 1 / h(j + 1, j);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j) == 0) continue;
      const Rational u = h(r, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(j + 1, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) += u * h(rr, r);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(1));
  const Polynomial x = Polynomial::monomial(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial pk = (x - Polynomial::constant(h(k, k))) * p[k];
    Rational sub = 1;
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sub == 0) break;
      if (h(i, k) != 0) pk = pk - (h(i, k) * sub) * p[i];
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    Polynomial r = -(seq[seq.size() - 2].divmod(seq.back()).second);
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

namespace {

int sign(const Rational& x) { return sgn(x); }

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(sign(q(x)));
  return sign_changes(s);
}

std::size_t variations_at_minus_infinity(const std::vector<Polynomial>& seq) {
  std::vector<int> s;
  for (const auto& q : seq) {
    int sg = sign(q.leading());
    if (q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return sign_changes(s);
}

}  // namespace

std::size_t count_real_roots(const Polynomial& p, const std::optional<Rational>& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  const Polynomial q = square_free_part(p);
  const auto seq = sturm_sequence(q);
  const std::size_t va = a ? variations_at(seq, *a) : variations_at_minus_infinity(seq);
  const std::size_t vb = variations_at(seq, b);
  return va >= vb ? va - vb : 0;
}

bool all_roots_real_nonpositive(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("all_roots_real_nonpositive: zero polynomial");
  const Polynomial q = square_free_part(p);
  if (q.degree() == 0) return true;
  return count_real_roots(q, std::nullopt, Rational(0)) == static_cast<std::size_t>(q.degree());
}

}  // namespace vaisman::exact
