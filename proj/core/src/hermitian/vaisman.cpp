#include "vaisman/hermitian/vaisman.hpp"

#include "vaisman/exact/polynomial.hpp"
#include "vaisman/liealg/extensions.hpp"
#include "vaisman/liealg/structure.hpp"

#include <random>
#include <stdexcept>

namespace vaisman::hermitian {

namespace {

using exact::to_string;

Vector embed(const Vector& x, std::size_t offset, std::size_t n) {
  Vector out = exact::zero_vector(n);
  for (std::size_t i = 0; i < x.size(); ++i) out[offset + i] = x[i];
  return out;
}

std::string failed_names(const Certificate& c) {
  std::string out;
  for (const auto& k : c)
    if (!k.pass) out += (out.empty() ? "" : ", ") + k.name + (k.witness.empty() ? "" : " [" + k.witness + "]");
  return out;
}

// Coordinates of w in the basis given by the columns of `basis`.
Vector coordinates(const Matrix& basis, const Vector& w) {
  auto y = basis.solve(w);
  if (!y) throw std::logic_error("vector outside the expected subspace");
  return *y;
}

}  // namespace

Certificate check_package(const KahlerFlatPackage& p) {
  Certificate c;
  const std::size_t n = p.k.dim();
  const bool shapes = p.m.dim() == n && p.J.rows() == n && p.J.cols() == n && p.D.rows() == n && p.D.cols() == n;
  c.push_back({"shapes", shapes, shapes ? "" : "metric, J or D does not match dim k"});
  if (!shapes) return c;
  c.push_back({"even dimension", n % 2 == 0, ""});
  const auto val = liealg::validate(p.k);
  c.push_back({"Jacobi", val.ok, val.violation});
  if (!val.ok) return c;
  c.push_back({"J^2 = -I", p.J * p.J == -Matrix::identity(n), ""});
  c.push_back({"J orthogonal", p.m.is_orthogonal(p.J), ""});
  c.push_back({"N_J = 0", is_integrable(p.k, p.J), ""});
  const KForm w = fundamental_form(p.m, p.J);
  c.push_back({"d omega = 0", n < 3 || liealg::ce_differential(p.k, w).is_zero(), ""});
  const auto fl = metricgeo::is_flat(p.k, p.m);
  c.push_back({"flat", fl.flat, fl.witness ? "R e_k = " + to_string(fl.witness->value) : ""});
  const auto der = liealg::check_derivation(p.k, p.D);
  c.push_back({"D derivation", der.ok, der.violation});
  c.push_back({"D skew", p.m.is_skew(p.D), ""});
  c.push_back({"DJ = JD", p.D * p.J == p.J * p.D, ""});
  return c;
}

HermitianData construct_vaisman(const KahlerFlatPackage& p) {
  const Certificate cert = check_package(p);
  if (!all_pass(cert)) throw std::invalid_argument("package invariant violated: " + failed_names(cert));

  const std::size_t d = p.k.dim();
  const std::size_t n = d + 2;
  const KForm w = fundamental_form(p.m, p.J);

  // D' extended by zero on the new central vector.
  Matrix dext = Matrix::zero(d + 1, d + 1);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) dext(r, s) = p.D(r, s);
  const auto ext = liealg::double_extension(p.k, w, dext);

  // double_extension orders (A, k..., xi); reorder to (A, B = xi, k...).
  Matrix perm = Matrix::zero(n, n);
  perm(0, 0) = 1;
  perm(n - 1, 1) = 1;
  for (std::size_t i = 0; i < d; ++i) perm(1 + i, 2 + i) = 1;
  std::vector<std::string> labels{"A", "B"};
  for (const auto& l : p.k.labels()) labels.push_back(l);
  LieAlgebra g = ext.algebra.change_basis(perm, labels);

  Matrix gram = Matrix::zero(n, n);
  Matrix j = Matrix::zero(n, n);
  gram(0, 0) = 1;
  gram(1, 1) = 1;
  j(1, 0) = 1;
  j(0, 1) = -1;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) {
      gram(r + 2, s + 2) = p.m.gram()(r, s);
      j(r + 2, s + 2) = p.J(r, s);
    }

  HermitianData h = make_hermitian(std::move(g), Metric(gram), std::move(j));
  const LckVerdict v = lck_verdict(h);
  if (!v.is_vaisman) throw std::logic_error("double extension of a Kahler flat package is not Vaisman");
  if (v.A != exact::unit_vector(n, 0)) throw std::logic_error("Lee vector of the double extension is not A");
  if (!ext.unimodular || !liealg::is_unimodular(h.g)) throw std::logic_error("double extension is not unimodular");
  if (!liealg::is_solvable(h.g)) throw std::logic_error("double extension is not solvable");
  return h;
}

LeeFrame lee_frame(const HermitianData& h, const LckVerdict& v) {
  if (v.theta.is_zero()) throw std::invalid_argument("Lee form vanishes");
  const std::size_t n = h.g.dim();
  LeeFrame fr{v.a_norm2, h.m.scaled(v.a_norm2), Rational(1 / v.a_norm2) * v.A, {}, {}, {}};
  fr.JA = h.J * fr.A;
  const Subspace aja(n, {fr.A, fr.JA});
  const std::size_t target = n - aja.dim();
  Subspace acc(n);
  for (std::size_t i = 0; i < n && fr.w.size() < target; ++i) {
    const Vector e = exact::unit_vector(n, i);
    const Vector pr = e - fr.metric.inner(e, fr.A) * fr.A - fr.metric.inner(e, fr.JA) * fr.JA;
    if (exact::is_zero(pr) || acc.contains(pr)) continue;
    acc = acc.sum(Subspace(n, {pr}));
    fr.w.push_back(pr);
    fr.w_labels.push_back(pr == e ? h.g.labels()[i] : h.g.labels()[i] + "'");
  }
  return fr;
}

VaismanReduction reduce_vaisman(const HermitianData& h) {
  const LckVerdict v = lck_verdict(h);
  if (!v.is_vaisman) throw std::invalid_argument("input is not Vaisman");
  if (!liealg::is_unimodular(h.g)) throw std::invalid_argument("input is not unimodular");
  if (!liealg::is_solvable(h.g)) throw std::invalid_argument("input is not solvable");

  const auto& g = h.g;
  const std::size_t n = g.dim();
  const LeeFrame fr = lee_frame(h, v);
  const Rational& c = fr.scale;
  const Metric& m = fr.metric;
  const Vector& a = fr.A;
  const Vector& ja = fr.JA;
  const KForm omega = c * h.omega;
  const Subspace aja(n, {a, ja});
  const Subspace wsp(n, fr.w);
  const std::vector<Vector>& wb = fr.w;
  const std::vector<std::string>& labels = fr.w_labels;
  const std::size_t d = wb.size();
  const Matrix wmat = Matrix::from_columns(wb, n);

  LieAlgebra k(d, labels);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j2 = i + 1; j2 < d; ++j2) {
      const Vector br = g.bracket(wb[i], wb[j2]);
      if (m.inner(br, a) != 0) throw std::logic_error("bracket on ker theta has an A-component");
      if (m.inner(br, ja) != omega.evaluate({wb[i], wb[j2]})) throw std::logic_error("JA-component of the bracket is not omega");
      const Vector brw = br - m.inner(br, ja) * ja;
      k.set_bracket(i, j2, coordinates(wmat, brw));
    }

  Matrix jp(d, d), dp(d, d), gp(d, d);
  const Matrix adA = g.ad(a);
  for (std::size_t i = 0; i < d; ++i) {
    jp.set_column(i, coordinates(wmat, h.J * wb[i]));
    dp.set_column(i, coordinates(wmat, adA * wb[i]));
    for (std::size_t j2 = 0; j2 < d; ++j2) gp(i, j2) = m.inner(wb[i], wb[j2]);
  }

  VaismanReduction out{KahlerFlatPackage{std::move(k), Metric(gp), std::move(jp), std::move(dp)}, c, a, ja, wsp, Matrix()};
  const Certificate cert = check_package(out.package);
  if (!all_pass(cert)) throw std::logic_error("reduced package fails: " + failed_names(cert));

  for (std::size_t i = 0; i < n; ++i)
    if (!exact::is_zero(g.bracket(ja, exact::unit_vector(n, i)))) throw std::logic_error("JA is not central");
  if (!aja.contains(liealg::center(g))) throw std::logic_error("center is not inside span{A, JA}");

  std::vector<Vector> cols{a, ja};
  cols.insert(cols.end(), wb.begin(), wb.end());
  out.basis_change = Matrix::from_columns(cols, n);
  return out;
}

NilradicalPrediction predict_nilradical(const KahlerFlatPackage& p) {
  const std::size_t d = p.k.dim();
  const std::size_t n = d + 2;
  const auto fd = metricgeo::flat_decomposition(p.k, p.m);
  const Subspace u = fd.z.intersect(fd.z.image_under(p.J));
  const std::size_t s = fd.z.dim() - u.dim();
  const std::size_t r = (u.dim() + fd.kprime.dim()) / 2;

  const Vector a = exact::unit_vector(n, 0);
  const Vector b = exact::unit_vector(n, 1);

  std::vector<Vector> der{b};
  bool d_u_zero = true;
  for (const auto& x : u.basis()) {
    const Vector dx = p.D * x;
    if (!exact::is_zero(dx)) d_u_zero = false;
    der.push_back(embed(dx, 2, n));
  }
  std::vector<Vector> base{b};
  for (const auto& x : fd.kprime.basis()) {
    der.push_back(embed(x, 2, n));
    base.push_back(embed(x, 2, n));
  }
  for (const auto& x : fd.z.basis()) base.push_back(embed(x, 2, n));

  NilradicalPrediction out;
  out.derived = Subspace(n, der);

  // Solve D x = -sum_j c_j ad_{H_j} x over a basis of k'.
  const auto& hb = fd.h.basis();
  const auto& kb = fd.kprime.basis();
  bool d_k_zero = true;
  std::optional<Vector> coeffs;
  for (const auto& x : kb)
    if (!exact::is_zero(p.D * x)) d_k_zero = false;
  if (!d_k_zero) {
    Matrix sys(kb.size() * d, hb.size());
    Vector rhs(kb.size() * d);
    for (std::size_t t = 0; t < kb.size(); ++t) {
      const Vector dx = p.D * kb[t];
      for (std::size_t j2 = 0; j2 < hb.size(); ++j2) {
        const Vector adx = p.k.bracket(hb[j2], kb[t]);
        for (std::size_t i = 0; i < d; ++i) sys(t * d + i, j2) = adx[i];
      }
      for (std::size_t i = 0; i < d; ++i) rhs[t * d + i] = -dx[i];
    }
    if (!hb.empty()) coeffs = sys.solve(rhs);
  }

  if (!d_u_zero || (!d_k_zero && !coeffs)) {
    out.case_index = 1;
    out.nilradical = Subspace(n, base);
    out.profile = {s, r};
  } else if (d_k_zero) {
    out.case_index = 2;
    base.push_back(a);
    out.nilradical = Subspace(n, base);
    out.profile = {s + 1, r};
  } else {
    out.case_index = 3;
    Vector hvec = exact::zero_vector(d);
    for (std::size_t j2 = 0; j2 < hb.size(); ++j2) hvec = hvec + (*coeffs)[j2] * hb[j2];
    base.push_back(a + embed(hvec, 2, n));
    out.nilradical = Subspace(n, base);
    if (fd.h.contains(p.J * hvec))
      out.profile = {s + 1, r};
    else
      out.profile = {s - 1, r + 1};
  }
  return out;
}

bool spectrum_imaginary(const Matrix& ad) {
  const exact::Polynomial p = exact::char_poly(ad);
  const int deg = p.degree();
  const exact::Polynomial mirrored = deg % 2 == 0 ? p.reflect() : -p.reflect();
  if (mirrored != p) return false;
  const std::size_t m = p.zero_multiplicity();
  const exact::Polynomial rest = p.shift_down(m);
  std::vector<Rational> even;
  const auto& cs = rest.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i % 2 == 1) {
      if (cs[i] != 0) return false;
    } else {
      even.push_back(cs[i]);
    }
  }
  const exact::Polynomial r(even);
  if (r.degree() <= 0) return true;
  return exact::all_roots_real_nonpositive(r);
}

SpectrumResult spectrum_all_imaginary(const LieAlgebra& g, std::size_t samples, unsigned long long seed) {
  SpectrumResult out;
  const std::size_t n = g.dim();
  auto test = [&](const Vector& x) {
    ++out.tested;
    if (!spectrum_imaginary(g.ad(x))) {
      out.pass = false;
      out.witness = x;
    }
    return out.pass;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!test(exact::unit_vector(n, i))) return out;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    for (auto& c : x) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
    if (!test(x)) return out;
  }
  return out;
}

}  // namespace vaisman::hermitian
