#include "vaisman/metricgeo/metric.hpp"

#include <stdexcept>

namespace vaisman::metricgeo {

bool is_positive_definite(const Matrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) idx.push_back(i);
    if (g.submatrix(idx, idx).determinant() <= 0) return false;
  }
  return true;
}

Metric::Metric(Matrix gram) : g_(std::move(gram)) {
  if (!g_.is_symmetric()) throw std::invalid_argument("metric is not symmetric");
  if (!is_positive_definite(g_)) throw std::invalid_argument("metric is not positive definite");
  ginv_ = g_.inverse();
}

Metric Metric::identity(std::size_t n) { return Metric(Matrix::identity(n)); }

Rational Metric::inner(const Vector& x, const Vector& y) const { return exact::dot(x, g_ * y); }

KForm Metric::flat(const Vector& v) const { return KForm::covector(g_ * v); }

Vector Metric::sharp(const KForm& alpha) const { return ginv_ * alpha.as_vector(); }

bool Metric::is_skew(const Matrix& t) const { return (t.transpose() * g_ + g_ * t).is_zero(); }

bool Metric::is_orthogonal(const Matrix& t) const { return t.transpose() * g_ * t == g_; }

Metric Metric::scaled(const Rational& s) const { return Metric(s * g_); }

Matrix Connection::along(const Vector& x) const {
  const std::size_t n = nabla.size();
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) r += x[i] * nabla[i];
  return r;
}

Connection levi_civita(const LieAlgebra& g, const Metric& m) {
  const std::size_t n = g.dim();
  if (m.dim() != n) throw std::invalid_argument("metric and algebra dimensions differ");
  const Matrix& G = m.gram();
  // bracket_cov[i][j] = G [e_i, e_j]: covector z -> <[e_i,e_j], z>.
  std::vector<std::vector<Vector>> bc(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bc[i][j] = G * g.bracket_basis(i, j);
  Connection c;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix nab(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector cov(n);
      for (std::size_t k = 0; k < n; ++k) cov[k] = half * (bc[i][j][k] - bc[j][k][i] + bc[k][i][j]);
      nab.set_column(j, m.inverse() * cov);
    }
    c.nabla.push_back(std::move(nab));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.is_skew(c.nabla[i])) throw std::logic_error("Levi-Civita connection is not metric");
    for (std::size_t j = 0; j < n; ++j)
      if (c.nabla[i].column(j) - c.nabla[j].column(i) != g.bracket_basis(i, j))
        throw std::logic_error("Levi-Civita connection has torsion");
  }
  return c;
}

Matrix curvature(const LieAlgebra& g, const Connection& c, const Vector& x, const Vector& y) {
  const Matrix nx = c.along(x), ny = c.along(y);
  return c.along(g.bracket(x, y)) - exact::commutator(nx, ny);
}

FlatnessResult is_flat(const LieAlgebra& g, const Metric& m) {
  const Connection c = levi_civita(g, m);
  const std::size_t n = g.dim();
  FlatnessResult r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix R = curvature(g, c, exact::unit_vector(n, i), exact::unit_vector(n, j));
      if (R.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        Vector col = R.column(k);
        if (!exact::is_zero(col)) {
          r.flat = false;
          r.witness = FlatnessWitness{i, j, k, col};
          return r;
        }
      }
    }
  return r;
}

KForm covariant_derivative(const Connection& c, std::size_t i, const KForm& alpha) {
  const std::size_t n = alpha.dim(), k = alpha.degree();
  KForm out(n, k);
  const Matrix& N = c.nabla[i];
  for (const auto& t : liealg::increasing_tuples(n, k)) {
    Rational v = 0;
    for (std::size_t p = 0; p < k; ++p) {
      liealg::Multi args = t;
      for (std::size_t mm = 0; mm < n; ++mm) {
        const Rational& coef = N(mm, t[p]);
        if (coef == 0) continue;
        args[p] = mm;
        v -= coef * alpha.on_basis(args);
      }
    }
    out.set_on_basis(t, v);
  }
  return out;
}

KForm codifferential(const LieAlgebra& g, const Metric& m, const KForm& alpha) {
  const std::size_t n = g.dim(), k = alpha.degree();
  if (k == 0) throw std::invalid_argument("codifferential of a 0-form");
  const Connection c = levi_civita(g, m);
  std::vector<KForm> nab;
  for (std::size_t j = 0; j < n; ++j) nab.push_back(covariant_derivative(c, j, alpha));
  KForm out(n, k - 1);
  const Matrix& Ginv = m.inverse();
  for (const auto& t : liealg::increasing_tuples(n, k - 1)) {
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        if (Ginv(j, l) == 0) continue;
        liealg::Multi args{l};
        args.insert(args.end(), t.begin(), t.end());
        v -= Ginv(j, l) * nab[j].on_basis(args);
      }
    out.set_on_basis(t, v);
  }
  return out;
}

}  // namespace vaisman::metricgeo
