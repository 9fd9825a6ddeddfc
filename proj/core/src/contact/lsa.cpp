#include "vaisman/contact/lsa.hpp"

#include "vaisman/liealg/extensions.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace vaisman::contact {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using exact::operator+;
using exact::operator-;
using exact::operator*;

namespace {

// Multivariate polynomial over Q, keyed by exponent vectors.
using Monomial = std::vector<unsigned>;
using MPoly = std::map<Monomial, Rational>;

void add_to(MPoly& acc, const MPoly& p, const Rational& s) {
  for (const auto& [m, c] : p) {
    Rational& slot = acc[m];
    slot += s * c;
    if (slot == 0) acc.erase(m);
  }
}

MPoly mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      Rational& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  return out;
}

// det(I + rho(x)) with x = sum x_k e_k symbolic, by expansion over column subsets.
MPoly symbolic_det(const LsaProduct& p) {
  const std::size_t n = p.dim();
  std::vector<std::vector<MPoly>> entry(n, std::vector<MPoly>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix rk = p.right(exact::unit_vector(n, k));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rk(r, c) != 0) {
          Monomial m(n, 0);
          m[k] = 1;
          entry[r][c][m] += rk(r, c);
        }
  }
  for (std::size_t r = 0; r < n; ++r) entry[r][r][Monomial(n, 0)] += 1;

  std::vector<MPoly> dp(std::size_t{1} << n);
  dp[0][Monomial(n, 0)] = 1;
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].empty()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (entry[row][c].empty()) continue;
      const auto above = static_cast<unsigned>(__builtin_popcountll(mask >> (c + 1)));
      add_to(dp[mask | (std::size_t{1} << c)], mul(dp[mask], entry[row][c]), above % 2 ? Rational(-1) : Rational(1));
    }
  }
  return dp.back();
}

}  // namespace

LsaProduct::LsaProduct(liealg::LieAlgebra g) : g_(std::move(g)), p_(g_.dim() * g_.dim() * g_.dim(), Rational(0)) {}

void LsaProduct::set(std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < dim(); ++k) p_[(i * dim() + j) * dim() + k] = v[k];
}

Vector LsaProduct::product(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out = exact::zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += s * p(i, j, k);
    }
  }
  return out;
}

Matrix LsaProduct::right(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, product(exact::unit_vector(n, j), x));
  return m;
}

LsaCheck check_lsa(const LsaProduct& p) {
  LsaCheck out;
  const std::size_t n = p.dim();
  const auto& g = p.algebra();
  const auto& lab = g.labels();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(exact::unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.product(e[i], e[j]) - p.product(e[j], e[i]) != g.bracket_basis(i, j)) {
        if (out.torsion) out.violation = "x.y - y.x != [x,y] at (" + lab[i] + ", " + lab[j] + ")";
        out.torsion = false;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = p.product(e[i], p.product(e[j], e[k])) - p.product(p.product(e[i], e[j]), e[k]);
        const Vector rhs = p.product(e[j], p.product(e[i], e[k])) - p.product(p.product(e[j], e[i]), e[k]);
        if (lhs != rhs) {
          if (out.left_symmetric && out.torsion)
            out.violation = "left symmetry fails at (" + lab[i] + ", " + lab[j] + ", " + lab[k] + ")";
          out.left_symmetric = false;
        }
      }
  return out;
}

LsaProduct lsa_from_central_extension(const liealg::LieAlgebra& h, const metricgeo::Metric& m, const liealg::KForm& beta,
                                      const std::string& xi_label) {
  if (!metricgeo::is_flat(h, m).flat) throw std::invalid_argument("base algebra is not flat");
  const auto conn = metricgeo::levi_civita(h, m);
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!metricgeo::covariant_derivative(conn, i, beta).is_zero()) throw std::invalid_argument("beta is not parallel");

  LsaProduct p(liealg::central_extension(h, beta, xi_label));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = conn.nabla[i].column(j);
      v.push_back(Rational(1, 2) * beta.on_basis({i, j}));
      p.set(i, j, v);
    }
  const auto chk = check_lsa(p);
  if (!chk.torsion || !chk.left_symmetric) throw std::logic_error("central extension product is not an LSA: " + chk.violation);
  return p;
}

LsaCompleteness lsa_completeness(const LsaProduct& p, std::size_t samples, unsigned long long seed) {
  LsaCompleteness out;
  const std::size_t n = p.dim();
  const Matrix id = Matrix::identity(n);
  auto test = [&](const Vector& x) {
    ++out.tested;
    const Matrix r = p.right(x);
    if (!power(r, static_cast<unsigned>(n)).is_zero()) out.nilpotent_certificate = false;
    if ((id + r).determinant() == 0 && out.no_witness) {
      out.no_witness = false;
      out.witness = x;
    }
  };
  for (std::size_t i = 0; i < n; ++i) test(exact::unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) test(exact::unit_vector(n, i) + exact::unit_vector(n, j));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    for (auto& c : x) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
    test(x);
  }
  if (n <= 6) {
    const MPoly det = symbolic_det(p);
    out.symbolic_unit_determinant = det.size() == 1 && det.begin()->first == Monomial(n, 0) && det.begin()->second == 1;
  }
  return out;
}

}  // namespace vaisman::contact
