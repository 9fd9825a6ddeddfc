#include "vaisman/contact/contact.hpp"

#include "vaisman/liealg/extensions.hpp"
#include "vaisman/liealg/structure.hpp"

#include <stdexcept>

namespace vaisman::contact {

namespace {

using exact::Subspace;
using exact::to_string;

// M(i, j) = eta(e_j) xi_i.
Matrix outer(const Vector& xi, const Vector& eta) {
  Matrix m(xi.size(), eta.size());
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = 0; j < eta.size(); ++j) m(i, j) = xi[i] * eta[j];
  return m;
}

Vector coordinates(const Matrix& basis, const Vector& w) {
  auto y = basis.solve(w);
  if (!y) throw std::logic_error("vector outside the expected subspace");
  return *y;
}

std::string first_nonzero(const std::string& what, const KForm& f) {
  const auto tuples = liealg::increasing_tuples(f.dim(), f.degree());
  for (std::size_t t = 0; t < tuples.size() && t < f.coefficients().size(); ++t) {
    if (f.coefficients()[t] == 0) continue;
    std::string idx;
    for (std::size_t i = 0; i < tuples[t].size(); ++i) idx += (i ? "," : "") + std::to_string(tuples[t][i]);
    return what + "(" + idx + ") = " + to_string(f.coefficients()[t]);
  }
  return {};
}

// First basis pair where N_phi + d eta (x) xi is nonzero.
std::string normality_witness(const AlmostContactStructure& a, const KForm& deta) {
  const std::size_t n = a.g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = nijenhuis(a.g, a.phi, exact::unit_vector(n, i), exact::unit_vector(n, j)) + deta.on_basis({i, j}) * a.xi;
      if (!exact::is_zero(v)) return "(N_phi + d eta xi)(" + a.g.labels()[i] + ", " + a.g.labels()[j] + ") = " + to_string(v);
    }
  return {};
}

}  // namespace

AlmostContactStructure make_almost_contact(LieAlgebra g, Metric m, Matrix phi, Vector xi, KForm eta) {
  const std::size_t n = g.dim();
  if (n % 2 == 0) throw std::invalid_argument("almost contact structures need odd dimension");
  if (m.dim() != n || phi.rows() != n || phi.cols() != n || xi.size() != n || eta.dim() != n || eta.degree() != 1)
    throw std::invalid_argument("phi, xi, eta and metric must match the algebra dimension");
  const Vector ev = eta.as_vector();
  if (exact::dot(ev, xi) != 1) throw std::invalid_argument("eta(xi) != 1");
  if (phi * phi != -Matrix::identity(n) + outer(xi, ev)) throw std::invalid_argument("phi^2 != -I + eta (x) xi");
  if (phi.transpose() * m.gram() * phi != m.gram() - outer(ev, ev))
    throw std::invalid_argument("<phi x, phi y> != <x, y> - eta(x) eta(y)");
  KForm big_phi = KForm::from_matrix(phi.transpose() * m.gram());
  return {std::move(g), std::move(m), std::move(phi), std::move(xi), std::move(eta), std::move(big_phi)};
}

Vector nijenhuis(const LieAlgebra& g, const Matrix& phi, const Vector& x, const Vector& y) {
  const Vector px = phi * x;
  const Vector py = phi * y;
  return g.bracket(px, py) + phi * (phi * g.bracket(x, y)) - phi * (g.bracket(px, y) + g.bracket(x, py));
}

AlmostContactStructure rescale_to_standard(const AlmostContactStructure& a) {
  return make_almost_contact(a.g, a.m.scaled(Rational(1, 4)), a.phi, Rational(-2) * a.xi, Rational(-1, 2) * a.eta);
}

ContactVerdict contact_verdict(const AlmostContactStructure& a) {
  if (a.g.dim() % 2 == 0) throw std::invalid_argument("contact verdict needs odd dimension");
  ContactVerdict v;
  Certificate& c = v.certificate;
  const KForm deta = liealg::ce_differential(a.g, a.eta);
  const KForm dphi = liealg::ce_differential(a.g, a.Phi);

  const std::string nw = normality_witness(a, deta);
  v.is_normal = nw.empty();
  c.push_back({"N_phi = -d eta (x) xi", v.is_normal, nw});

  const KForm minus_defect = deta + a.Phi;
  c.push_back({"d eta = -Phi", minus_defect.is_zero(), first_nonzero("d eta + Phi", minus_defect)});
  v.is_sasakian_minus = v.is_normal && minus_defect.is_zero();

  const auto s = rescale_to_standard(a);
  const KForm deta_s = liealg::ce_differential(s.g, s.eta);
  const KForm std_defect = deta_s - Rational(2) * s.Phi;
  const bool std_normal = normality_witness(s, deta_s).empty();
  c.push_back({"d eta' = 2 Phi' (rescaled)", std_defect.is_zero(), first_nonzero("d eta' - 2 Phi'", std_defect)});
  v.is_sasakian_standard = std_normal && std_defect.is_zero();

  c.push_back({"d eta = 0", deta.is_zero(), first_nonzero("d eta", deta)});
  c.push_back({"d Phi = 0", dphi.is_zero(), first_nonzero("d Phi", dphi)});
  v.is_almost_cokahler = deta.is_zero() && dphi.is_zero();
  v.is_cokahler = v.is_almost_cokahler && v.is_normal;

  const auto conn = metricgeo::levi_civita(a.g, a.m);
  v.phi_parallel = true;
  for (const auto& nab : conn.nabla)
    if (nab * a.phi != a.phi * nab) v.phi_parallel = false;
  c.push_back({"phi parallel", v.phi_parallel, ""});
  if (v.is_cokahler && !v.phi_parallel) throw std::logic_error("coKahler structure with non-parallel phi");
  return v;
}

AlmostContactStructure kernel_structure(const HermitianData& h) {
  const auto v = hermitian::lck_verdict(h);
  if (!v.is_vaisman) throw std::invalid_argument("input is not Vaisman");
  const auto fr = hermitian::lee_frame(h, v);
  const std::size_t n = h.g.dim();
  std::vector<Vector> basis{fr.JA};
  basis.insert(basis.end(), fr.w.begin(), fr.w.end());
  std::vector<std::string> labels{"JA"};
  labels.insert(labels.end(), fr.w_labels.begin(), fr.w_labels.end());
  const std::size_t d = basis.size();
  const Matrix b = Matrix::from_columns(basis, n);

  LieAlgebra k = liealg::subalgebra(h.g, basis, labels);
  Matrix phi = Matrix::zero(d, d);
  for (std::size_t i = 1; i < d; ++i) phi.set_column(i, coordinates(b, h.J * basis[i]));
  Vector eta(d);
  const Vector th = v.theta.as_vector();
  for (std::size_t i = 0; i < d; ++i) eta[i] = -exact::dot(th, h.J * basis[i]);
  return make_almost_contact(std::move(k), Metric(b.transpose() * fr.metric.gram() * b), std::move(phi),
                             exact::unit_vector(d, 0), KForm::covector(eta));
}

SasakianReduction sasakian_kernel_reduction(const AlmostContactStructure& a) {
  const auto v = contact_verdict(a);
  if (!v.is_sasakian_minus && !v.is_sasakian_standard) throw std::invalid_argument("structure is not Sasakian");
  const std::size_t n = a.g.dim();
  if (liealg::center(a.g) != Subspace(n, {a.xi})) throw std::invalid_argument("center is not spanned by xi");

  const Vector ev = a.eta.as_vector();
  std::vector<Vector> basis;
  std::vector<std::string> labels;
  Subspace acc(n);
  for (std::size_t i = 0; i < n && basis.size() + 1 < n; ++i) {
    const Vector e = exact::unit_vector(n, i);
    const Vector pr = e - ev[i] * a.xi;
    if (exact::is_zero(pr) || acc.contains(pr)) continue;
    acc = acc.sum(Subspace(n, {pr}));
    basis.push_back(pr);
    labels.push_back(pr == e ? a.g.labels()[i] : a.g.labels()[i] + "'");
  }
  const std::size_t d = basis.size();
  const Matrix b = Matrix::from_columns(basis, n);
  LieAlgebra k(d, labels);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector br = a.g.bracket(basis[i], basis[j]);
      k.set_bracket(i, j, coordinates(b, br - exact::dot(ev, br) * a.xi));
    }
  Matrix j(d, d);
  for (std::size_t i = 0; i < d; ++i) j.set_column(i, coordinates(b, a.phi * basis[i]));

  SasakianReduction out{hermitian::make_hermitian(std::move(k), Metric(b.transpose() * a.m.gram() * b), std::move(j)), b, false};
  const auto kv = hermitian::lck_verdict(out.kahler);
  if (!kv.is_kahler) throw std::logic_error("kernel of a Sasakian structure is not Kahler");
  if (liealg::is_unimodular(a.g) && liealg::is_solvable(a.g)) {
    if (!metricgeo::is_flat(out.kahler.g, out.kahler.m).flat) throw std::logic_error("Kahler kernel is not flat");
    out.flat_checked = true;
  }
  return out;
}

CoKahlerReduction vaisman_to_cokahler(const HermitianData& h) {
  auto red = hermitian::reduce_vaisman(h);
  const auto& p = red.package;
  const std::size_t d = p.k.dim();
  const std::size_t n = d + 1;

  std::vector<std::string> labels{"A"};
  labels.insert(labels.end(), p.k.labels().begin(), p.k.labels().end());
  LieAlgebra dalg = liealg::semidirect_product(p.k, p.D, "A");
  dalg.set_labels(labels);
  Matrix gram = Matrix::zero(n, n), phi = Matrix::zero(n, n);
  gram(0, 0) = 1;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) {
      gram(r + 1, s + 1) = p.m.gram()(r, s);
      phi(r + 1, s + 1) = p.J(r, s);
    }
  auto a = make_almost_contact(std::move(dalg), Metric(gram), std::move(phi), exact::unit_vector(n, 0), KForm::dual_basis(n, 0));
  const auto v = contact_verdict(a);
  if (!v.is_cokahler) throw std::logic_error("reduced algebra is not coKahler");
  if (!metricgeo::is_flat(a.g, a.m).flat) throw std::logic_error("coKahler reduction is not flat");

  LieAlgebra ext = liealg::central_extension(a.g, a.Phi, "JA");
  // Canonical (A, B, k...) reordered to (A, k..., B).
  Matrix perm = Matrix::zero(n + 1, n + 1);
  perm(0, 0) = 1;
  for (std::size_t i = 0; i < d; ++i) perm(2 + i, 1 + i) = 1;
  perm(1, n) = 1;
  const LieAlgebra canon = hermitian::construct_vaisman(p).g.change_basis(perm);
  if (!(canon == ext)) throw std::logic_error("central extension by Phi does not reproduce the algebra");
  if (!(h.g.change_basis(red.basis_change * perm) == ext))
    throw std::logic_error("central extension by Phi does not reproduce the input");
  return {std::move(a), std::move(ext), std::move(red)};
}

}  // namespace vaisman::contact
