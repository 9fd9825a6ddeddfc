#include "vaisman/classify/classify.hpp"

#include "vaisman/exact/polynomial.hpp"
#include "vaisman/hermitian/examples.hpp"
#include "vaisman/lattices/lattices.hpp"
#include "vaisman/liealg/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace vaisman::classify {

using exact::Polynomial;
using exact::Subspace;
using exact::Vector;

namespace {

std::vector<Rational> rs(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Rational roots with multiplicity, or nullopt when some root is irrational
// (or the coefficients are too large to search).
std::optional<std::vector<Rational>> rational_roots(Polynomial p) {
  std::vector<Rational> roots;
  const std::size_t z = p.zero_multiplicity();
  roots.insert(roots.end(), z, Rational(0));
  p = p.shift_down(z);
  if (p.degree() <= 0) return roots;
  const Integer den = exact::common_denominator(p.coefficients());
  const Integer a0 = Rational(p.coefficient(0) * Rational(den)).get_num();
  const Integer an = Rational(p.leading() * Rational(den)).get_num();
  if (abs(a0) > 1000000 || abs(an) > 1000000) return std::nullopt;
  for (const auto& num : divisors(a0))
    for (const auto& d : divisors(an))
      for (int sign : {1, -1}) {
        Rational c(sign * num, d);
        c.canonicalize();
        while (p.degree() > 0 && p(c) == 0) {
          roots.push_back(c);
          p = p.divmod(Polynomial::linear_factor(c)).first;
        }
      }
  if (p.degree() > 0) return std::nullopt;
  return roots;
}

std::optional<Rational> rational_sqrt(const Rational& c) {
  if (c < 0) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
  if (n * n != c.get_num() || d * d != c.get_den()) return std::nullopt;
  return Rational(n, d);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::RxH3: return "R x h3";
    case Family::RsH3: return "R x| h3";
    case Family::RxH5: return "R x h5";
    case Family::RsDrH5: return "R x|_{D_r} h5";
    case Family::RxS5: return "R x s5";
    case Family::RsD0S5: return "R x|_{D_0} s5";
  }
  return "";
}

}  // namespace

std::string name(const FamilyTag& t) {
  if (t.family == Family::RsDrH5) return "R x|_{D_" + exact::to_string(t.r) + "} h5";
  return family_name(t.family);
}

FamilyTag parse_family(const std::string& s) {
  for (Family f : {Family::RxH3, Family::RsH3, Family::RxH5, Family::RxS5, Family::RsD0S5})
    if (s == family_name(f)) return {f, 0};
  std::string r;
  const std::string pre = "R x|_{D_", post = "} h5";
  if (s.rfind(pre, 0) == 0 && s.size() > pre.size() + post.size() && s.substr(s.size() - post.size()) == post)
    r = s.substr(pre.size(), s.size() - pre.size() - post.size());
  else if (s.rfind("Dr:", 0) == 0)
    r = s.substr(3);
  else
    throw std::invalid_argument("unknown family '" + s + "'");
  return {Family::RsDrH5, exact::parse_rational(r)};
}

FamilyMember build_family(const FamilyTag& t) {
  using namespace hermitian;
  KahlerFlatPackage p;
  switch (t.family) {
    case Family::RxH3: p = abelian_package(rs({0})); break;
    case Family::RsH3: p = abelian_package(rs({1})); break;
    case Family::RxH5: p = abelian_package(rs({0, 0})); break;
    case Family::RsDrH5:
      if (t.r < 0 || t.r > 1) throw std::invalid_argument("r must lie in [0, 1]");
      p = abelian_package({t.r, Rational(1)});
      break;
    case Family::RxS5: p = one_h_package(0, rs({1}), rs({0})); break;
    case Family::RsD0S5: p = one_h_package(0, rs({1}), rs({1})); break;
  }
  HermitianData h = construct_vaisman(p);
  return {t, std::move(p), std::move(h)};
}

std::vector<FamilyTag> dim6_catalogue(const std::vector<Rational>& r_grid) {
  std::vector<FamilyTag> out{{Family::RxH5, 0}, {Family::RxS5, 0}, {Family::RsD0S5, 0}};
  for (const auto& r : r_grid) out.push_back({Family::RsDrH5, r});
  return out;
}

IsoInvariant iso_invariant(const LieAlgebra& g) {
  const auto rep = liealg::analyze(g);
  if (!rep.solvable || !rep.nilradical) throw std::invalid_argument("invariants need a solvable algebra");
  IsoInvariant inv;
  inv.dim = g.dim();
  inv.nilpotent = rep.nilpotent;
  inv.center_dim = rep.center.dim();
  inv.profile = rep.heisenberg_profile;
  const Subspace& n = *rep.nilradical;
  inv.nilradical_dim = n.dim();
  if (g.dim() != n.dim() + 1) return inv;

  // X spans g/n; ad_X descends to n/n'.
  Vector x;
  for (std::size_t i = 0; i < g.dim() && x.empty(); ++i)
    if (!n.contains(exact::unit_vector(g.dim(), i))) x = exact::unit_vector(g.dim(), i);
  const Subspace nn = liealg::bracket_span(g, n, n);
  std::vector<Vector> basis = nn.basis();
  const std::size_t low = basis.size();
  Subspace acc = nn;
  for (const auto& v : n.basis())
    if (!acc.contains(v)) {
      basis.push_back(v);
      acc = acc.sum(Subspace(g.dim(), {v}));
    }
  const std::size_t q = basis.size() - low;
  const Matrix b = Matrix::from_columns(basis, g.dim());
  Matrix m(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    const auto c = b.solve(g.bracket(x, basis[low + j]));
    if (!c) throw std::logic_error("nilradical not an ideal");
    for (std::size_t i = 0; i < q; ++i) m(i, j) = (*c)[low + i];
  }
  const Polynomial p = exact::char_poly(m);

  SpectrumSignature sig;
  sig.zero = p.zero_multiplicity();
  const Polynomial r = p.shift_down(sig.zero);
  // r(x) = s(x^2) with s having negative real roots iff the rest is imaginary.
  bool even = true;
  std::vector<Rational> sc;
  for (std::size_t k = 0; k < r.coefficients().size(); ++k) {
    if (k % 2 == 1 && r.coefficients()[k] != 0) even = false;
    if (k % 2 == 0) sc.push_back(r.coefficients()[k]);
  }
  const Polynomial s(sc);
  if (even && (s.degree() <= 0 || exact::all_roots_real_nonpositive(s))) {
    sig.imaginary_pairs = static_cast<std::size_t>(std::max(0, s.degree()));
  } else {
    sig.other = static_cast<std::size_t>(r.degree());
  }
  inv.spectrum = sig;

  if (sig.other == 0 && sig.zero % 2 == 0 && sig.imaginary_pairs > 0) {
    if (const auto roots = rational_roots(s)) {
      std::vector<Rational> speeds(sig.zero / 2, Rational(0));
      bool ok = true;
      for (const auto& root : *roots) {
        const auto c = rational_sqrt(-root);
        if (!c) ok = false;
        else speeds.push_back(*c);
      }
      if (ok) inv.speeds = lattices::normalize(speeds).a;
    }
  }
  return inv;
}

std::vector<std::string> separating_components(const IsoInvariant& a, const IsoInvariant& b) {
  std::vector<std::string> out;
  if (a.dim != b.dim) out.push_back("dim");
  if (a.nilpotent != b.nilpotent) out.push_back("nilpotent");
  if (a.nilradical_dim != b.nilradical_dim) out.push_back("nilradical dim");
  if (a.profile != b.profile) out.push_back("nilradical profile");
  if (a.center_dim != b.center_dim) out.push_back("center dim");
  if (a.speeds != b.speeds) out.push_back("oscillator ratio");
  if (a.spectrum != b.spectrum) out.push_back("spectrum signature");
  return out;
}

std::optional<Matrix> explicit_isomorphism(const FamilyTag& from, const FamilyTag& to) {
  const FamilyTag d0s5{Family::RsD0S5, 0}, d0h5{Family::RsDrH5, 0};
  const bool forward = from == d0s5 && to == d0h5;
  const bool backward = from == d0h5 && to == d0s5;
  if (!forward && !backward) return std::nullopt;
  // In R x|_{D_0} s5 = span(A, B, H, Z, u, v): A' = A - H commutes with u, v
  // and [H - A, Z] = B, so (A, B, H - A, Z, u, v) is the oscillator basis of g_(0,1).
  const Matrix p{{1, 0, -1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                 {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  if (!(build_family(d0s5).structure.g.change_basis(p) == build_family(d0h5).structure.g))
    throw std::logic_error("isomorphism witness does not intertwine the brackets");
  return forward ? p : p.inverse();
}

SeparationReport separate(const std::vector<FamilyTag>& tags) {
  SeparationReport rep;
  rep.tags = tags;
  for (const auto& t : tags) {
    const auto m = build_family(t);
    rep.invariants.push_back(iso_invariant(m.structure.g));
    const auto pred = hermitian::predict_nilradical(m.package);
    if (rep.invariants.back().profile != std::optional(pred.profile)) rep.profiles_match_prediction = false;
  }
  for (std::size_t i = 0; i < tags.size(); ++i)
    for (std::size_t j = i + 1; j < tags.size(); ++j) {
      PairSeparation ps{tags[i], tags[j], separating_components(rep.invariants[i], rep.invariants[j]), std::nullopt};
      if (ps.components.empty()) {
        rep.all_separated = false;
        ps.isomorphism = explicit_isomorphism(tags[i], tags[j]);
      }
      rep.pairs.push_back(std::move(ps));
    }
  return rep;
}

Classification classify(const LieAlgebra& g) {
  Classification c;
  c.solvable = liealg::is_solvable(g);
  c.unimodular = liealg::is_unimodular(g);
  if (!c.solvable) throw std::invalid_argument("classification needs a solvable algebra");
  c.invariant = iso_invariant(g);
  std::vector<FamilyTag> candidates;
  if (g.dim() == 4) {
    candidates = {{Family::RxH3, 0}, {Family::RsH3, 0}};
  } else if (g.dim() == 6) {
    candidates = dim6_catalogue({});
    if (c.invariant.speeds && c.invariant.speeds->size() == 2 && (*c.invariant.speeds)[1] != 0) {
      Rational r((*c.invariant.speeds)[0], (*c.invariant.speeds)[1]);
      r.canonicalize();
      if (r >= 0 && r <= 1) candidates.push_back({Family::RsDrH5, r});
    }
  }
  if (!c.unimodular) return c;
  for (const auto& t : candidates)
    if (iso_invariant(build_family(t).structure.g) == c.invariant) c.matches.push_back(t);
  return c;
}

}  // namespace vaisman::classify
