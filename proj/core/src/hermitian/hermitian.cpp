#include "vaisman/hermitian/hermitian.hpp"

#include "vaisman/liealg/structure.hpp"

#include <stdexcept>

namespace vaisman::hermitian {

namespace {

using exact::Subspace;
using exact::to_string;

Check check(std::string name, bool pass, std::string witness = {}) { return {std::move(name), pass, std::move(witness)}; }

std::string form_witness(const std::string& what, const KForm& f) {
  const auto tuples = liealg::increasing_tuples(f.dim(), f.degree());
  for (std::size_t t = 0; t < tuples.size() && t < f.coefficients().size(); ++t) {
    if (f.coefficients()[t] == 0) continue;
    std::string idx;
    for (std::size_t i = 0; i < tuples[t].size(); ++i) idx += (i ? "," : "") + std::to_string(tuples[t][i]);
    return what + "(" + idx + ") = " + to_string(f.coefficients()[t]);
  }
  return {};
}

}  // namespace

Vector nijenhuis(const LieAlgebra& g, const Matrix& j, const Vector& x, const Vector& y) {
  const Vector jx = j * x;
  const Vector jy = j * y;
  return g.bracket(jx, jy) - g.bracket(x, y) - j * (g.bracket(jx, y) + g.bracket(x, jy));
}

bool is_integrable(const LieAlgebra& g, const Matrix& j) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!exact::is_zero(nijenhuis(g, j, exact::unit_vector(n, a), exact::unit_vector(n, b)))) return false;
  return true;
}

KForm fundamental_form(const Metric& m, const Matrix& j) { return KForm::from_matrix(j.transpose() * m.gram()); }

HermitianData make_hermitian(LieAlgebra g, Metric m, Matrix j) {
  const std::size_t n = g.dim();
  if (m.dim() != n || j.rows() != n || j.cols() != n) throw std::invalid_argument("J and metric must match the algebra dimension");
  if (n % 2 != 0) throw std::invalid_argument("complex structure needs even dimension");
  if (j * j != -Matrix::identity(n)) throw std::invalid_argument("J^2 != -I");
  if (!m.is_orthogonal(j)) throw std::invalid_argument("J is not compatible with the metric");
  KForm omega = fundamental_form(m, j);
  return {std::move(g), std::move(m), std::move(j), std::move(omega)};
}

KForm lee_form(const HermitianData& h) {
  const std::size_t dim = h.g.dim();
  if (dim < 4) throw std::invalid_argument("Lee form formula needs dim >= 4");
  const Rational n_minus_1(static_cast<long>(dim / 2 - 1));
  const KForm dw = metricgeo::codifferential(h.g, h.m, h.omega);
  return Rational(-1 / n_minus_1) * dw.pullback(h.J);
}

LckVerdict lck_verdict(const HermitianData& h) {
  const auto& g = h.g;
  const std::size_t n = g.dim();
  LckVerdict v;
  Certificate& c = v.certificate;

  std::string nj;
  for (std::size_t a = 0; a < n && nj.empty(); ++a)
    for (std::size_t b = a + 1; b < n && nj.empty(); ++b) {
      const Vector w = nijenhuis(g, h.J, exact::unit_vector(n, a), exact::unit_vector(n, b));
      if (!exact::is_zero(w)) nj = "N_J(" + g.labels()[a] + ", " + g.labels()[b] + ") = " + to_string(w);
    }
  v.is_hermitian = nj.empty();
  c.push_back(check("J^2 = -I", true));
  c.push_back(check("J orthogonal", true));
  c.push_back(check("N_J = 0", v.is_hermitian, nj));

  // In dimension 2 every 2-form is closed and theta is taken to be 0.
  const bool low = n < 3;
  v.theta = n >= 4 ? lee_form(h) : KForm(n, 1);
  const KForm dtheta = liealg::ce_differential(g, v.theta);
  const KForm dw = low ? KForm() : liealg::ce_differential(g, h.omega);
  const KForm defect = low ? KForm() : dw - liealg::wedge(v.theta, h.omega);

  c.push_back(check("d omega = 0", dw.is_zero(), form_witness("d omega", dw)));
  c.push_back(check("d theta = 0", dtheta.is_zero(), form_witness("d theta", dtheta)));
  c.push_back(check("d omega = theta ^ omega", defect.is_zero(), form_witness("d omega - theta ^ omega", defect)));

  v.is_kahler = v.is_hermitian && dw.is_zero();
  v.is_lck = v.is_hermitian && dtheta.is_zero() && defect.is_zero();

  v.A = h.m.sharp(v.theta);
  v.a_norm2 = h.m.norm2(v.A);
  const bool theta_nonzero = !v.theta.is_zero();
  c.push_back(check("theta != 0", theta_nonzero, "theta = " + to_string(v.theta.as_vector())));

  const Matrix adA = g.ad(v.A);
  const Matrix skew_defect = adA.transpose() * h.m.gram() + h.m.gram() * adA;
  std::string sk;
  if (!skew_defect.is_zero()) {
    for (std::size_t r = 0; r < n && sk.empty(); ++r)
      for (std::size_t s = 0; s < n && sk.empty(); ++s)
        if (skew_defect(r, s) != 0)
          sk = "(ad_A^T G + G ad_A)(" + std::to_string(r) + "," + std::to_string(s) + ") = " + to_string(skew_defect(r, s));
  }
  c.push_back(check("ad_A skew", sk.empty(), sk));
  v.is_vaisman = v.is_lck && theta_nonzero && sk.empty();
  if (theta_nonzero)
    c.push_back(check("unit normalization", true, "metric scaled by |A|^2 = " + to_string(v.a_norm2)));
  return v;
}

KahlerFlatResult kahler_flat_check(const LieAlgebra& g, const Metric& m, const Matrix& j) {
  if (!metricgeo::is_flat(g, m).flat) throw std::invalid_argument("kahler_flat_check needs a flat metric");
  KahlerFlatResult r;

  const auto conn = metricgeo::levi_civita(g, m);
  r.route_connection = true;
  for (const auto& nab : conn.nabla)
    if (nab * j != j * nab) {
      r.route_connection = false;
      break;
    }

  const auto fd = metricgeo::flat_decomposition(g, m);
  const Subspace zh = fd.z.sum(fd.h);
  r.route_splitting = zh.contains(zh.image_under(j)) && fd.kprime.contains(fd.kprime.image_under(j));
  for (const auto& hv : fd.h.basis()) {
    if (!r.route_splitting) break;
    const Matrix adh = g.ad(hv);
    if (adh * j != j * adh) r.route_splitting = false;
  }

  if (r.route_connection != r.route_splitting) throw std::logic_error("Kahler criteria disagree on a flat algebra");
  r.kahler = r.route_connection;
  return r;
}

Certificate vaisman_identities(const HermitianData& h, const LckVerdict& v) {
  Certificate c;
  const auto& g = h.g;
  const Vector ja = h.J * v.A;
  const Matrix adA = g.ad(v.A);
  const Matrix adJA = g.ad(ja);
  const Vector b = g.bracket(v.A, ja);
  c.push_back(check("[A, JA] = 0", exact::is_zero(b), exact::is_zero(b) ? "" : to_string(b)));
  c.push_back(check("J ad_A = ad_A J", h.J * adA == adA * h.J));
  c.push_back(check("J ad_JA = ad_JA J", h.J * adJA == adJA * h.J));
  c.push_back(check("ad_JA skew", h.m.is_skew(adJA)));

  if (liealg::is_unimodular(g) && g.dim() >= 4) {
    const Subspace der = liealg::derived_algebra(g);
    c.push_back(check("JA in g'", der.contains(ja)));
    // sum_{j,k} G^{jk} J[J e_j, e_k] is basis independent; it reduces to
    // sum_i J[J e_i, e_i] on an orthonormal basis.
    const std::size_t n = g.dim();
    Vector sum = exact::zero_vector(n);
    const Matrix& gi = h.m.inverse();
    for (std::size_t a = 0; a < n; ++a) {
      const Vector jea = h.J.column(a);
      for (std::size_t b2 = 0; b2 < n; ++b2)
        if (gi(a, b2) != 0) sum = sum + gi(a, b2) * (h.J * g.bracket(jea, exact::unit_vector(n, b2)));
    }
    const Rational factor = v.a_norm2 / Rational(static_cast<long>(2 * (n / 2 - 1)));
    const Vector rhs = factor * sum;
    c.push_back(check("Lee dual formula", rhs == v.A, "rhs = " + to_string(rhs)));
  }
  return c;
}

}  // namespace vaisman::hermitian
