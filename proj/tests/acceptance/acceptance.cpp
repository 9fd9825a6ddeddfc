// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
//
// Exit code 0 iff every requested criterion passes.

#include "helpers.hpp"
#include "vaisman/classify/classify.hpp"
#include "vaisman/contact/contact.hpp"
#include "vaisman/contact/lsa.hpp"
#include "vaisman/hermitian/examples.hpp"
#include "vaisman/lattices/lattices.hpp"
#include "vaisman/liealg/structure.hpp"
#include "vaisman/metricgeo/flat.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace vaisman;
using exact::Integer;
using exact::Matrix;
using exact::Rational;
using exact::Subspace;
using exact::Vector;
using hermitian::KahlerFlatPackage;
using liealg::KForm;
using liealg::LieAlgebra;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};


std::string describe(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

// Every n-tuple with entries in `values`, in lexicographic order.
std::vector<std::vector<Rational>> tuples(std::size_t n, const std::vector<long>& values) {
  std::vector<std::vector<Rational>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& t : out)
      for (long v : values) {
        auto u = t;
        u.emplace_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

template <class T>
std::vector<T> every(const std::vector<T>& v, std::size_t stride) {
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); i += stride) out.push_back(v[i]);
  return out;
}

struct GridCase {
  std::string label;
  KahlerFlatPackage p;
};

// 200 Kahler flat packages: abelian R^{2n} (n <= 3) and k2-type bases with
// dim h = 1, block parameters in [-3, 3].
const std::vector<GridCase>& grid() {
  static const std::vector<GridCase> cases = [] {
    const std::vector<long> all{-3, -2, -1, 0, 1, 2, 3};
    const std::vector<long> nonzero{-3, -2, -1, 1, 2, 3};
    std::vector<GridCase> out;
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& a : every(tuples(n, all), n == 3 ? 7 : 1))
        out.push_back({"R^" + std::to_string(2 * n) + " D=" + describe(a), hermitian::abelian_package(a)});

    struct Shape {
      std::size_t l, m, stride;
    };
    for (const Shape s : {Shape{0, 1, 1}, Shape{1, 1, 12}, Shape{0, 2, 63}}) {
      std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> params;
      for (const auto& a : tuples(s.m, nonzero))
        for (const auto& alpha : tuples(s.l + s.m, all)) params.emplace_back(a, alpha);
      for (const auto& [a, alpha] : every(params, s.stride))
        out.push_back({"k2 l=" + std::to_string(s.l) + " a=" + describe(a) + " alpha=" + describe(alpha),
                       hermitian::one_h_package(s.l, a, alpha)});
    }
    return out;
  }();
  return cases;
}

std::string matrix_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? "; " : "") + exact::to_string(m.row(r));
  return s + "]";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Result within(Result r, double elapsed, double budget) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << elapsed << " s";
  if (elapsed >= budget) {
    r.pass = false;
    s << " (budget " << budget << " s exceeded)";
  }
  r.detail = r.detail.empty() ? s.str() : r.detail + "; " + s.str();
  return r;
}

void fail(Result& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

// 1. The standard structure on R x h_{2n+1}.
Result example_reproduction() {
  Result r;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto h = hermitian::heisenberg_example(n);
    const std::size_t dim = 2 * n + 2;
    const KForm wstar = KForm::dual_basis(dim, dim - 1);
    const auto v = hermitian::lck_verdict(h);
    if (!(v.theta == wstar)) fail(r, "n=" + std::to_string(n) + ": theta != w*");
    if (!(liealg::ce_differential(h.g, h.omega) == liealg::wedge(wstar, h.omega)))
      fail(r, "n=" + std::to_string(n) + ": d omega != w* ^ omega");
    if (!v.is_vaisman) fail(r, "n=" + std::to_string(n) + ": not Vaisman");
  }
  if (r.pass) r.detail = "n = 1, 2, 3";
  return r;
}

// 2. Double extensions of the grid packages are Vaisman, unimodular, solvable.
Result double_extension_verdict() {
  Result r;
  for (const auto& c : grid()) {
    try {
      const auto h = hermitian::construct_vaisman(c.p);
      if (!hermitian::lck_verdict(h).is_vaisman) fail(r, c.label + ": verdict false");
      if (!liealg::is_unimodular(h.g)) fail(r, c.label + ": not unimodular");
      if (!liealg::is_solvable(h.g)) fail(r, c.label + ": not solvable");
    } catch (const std::exception& e) {
      fail(r, c.label + ": " + e.what());
    }
  }
  if (r.pass) r.detail = std::to_string(grid().size()) + " packages";
  return r;
}

// 3. reduce_vaisman o construct_vaisman = id.
Result reduction_round_trip() {
  Result r;
  for (const auto& c : grid()) {
    try {
      const auto red = hermitian::reduce_vaisman(hermitian::construct_vaisman(c.p));
      if (!(red.package.k == c.p.k)) fail(r, c.label + ": brackets differ");
      if (!(red.package.J == c.p.J)) fail(r, c.label + ": J differs");
      if (!(red.package.m == c.p.m)) fail(r, c.label + ": metric differs");
      if (!(red.package.D == c.p.D)) fail(r, c.label + ": D differs");
      if (!(red.basis_change == Matrix::identity(c.p.k.dim() + 2))) fail(r, c.label + ": basis not canonical");
    } catch (const std::exception& e) {
      fail(r, c.label + ": " + e.what());
    }
  }
  if (r.pass) r.detail = std::to_string(grid().size()) + " round trips";
  return r;
}

// 4. Unimodular Kahler => flat; flat => unimodular, solvable, decomposition properties.
Result kahler_flat_oracles() {
  Result r;
  std::size_t kahler = 0;
  for (const auto& c : grid()) {
    const auto& p = c.p;
    const auto h = hermitian::make_hermitian(p.k, p.m, p.J);
    const bool is_kahler = hermitian::lck_verdict(h).is_kahler;
    const bool flat = metricgeo::is_flat(p.k, p.m).flat;
    if (is_kahler && liealg::is_unimodular(p.k)) {
      ++kahler;
      if (!flat) fail(r, c.label + ": unimodular Kahler but not flat");
    }
    if (!flat) continue;
    if (!liealg::is_unimodular(p.k) || !liealg::is_solvable(p.k)) fail(r, c.label + ": flat but not unimodular solvable");
    try {
      const auto fd = metricgeo::flat_decomposition(p.k, p.m);
      for (const auto& prop : metricgeo::flat_properties(p.k, p.m, fd))
        if (!prop.pass) fail(r, c.label + ": " + prop.name);
    } catch (const std::exception& e) {
      fail(r, c.label + ": " + e.what());
    }
  }
  // aff(R) x aff(R) is Kahler but neither unimodular nor flat.
  const auto aff2 = liealg::direct_sum(testsupport::aff_r(), testsupport::aff_r());
  const auto h = hermitian::make_hermitian(aff2, metricgeo::Metric::identity(4),
                                           Matrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  if (!hermitian::lck_verdict(h).is_kahler || liealg::is_unimodular(aff2) || metricgeo::is_flat(aff2, h.m).flat)
    fail(r, "aff(R) x aff(R) control misbehaves");
  if (r.pass) r.detail = std::to_string(kahler) + " unimodular Kahler instances, all flat";
  return r;
}

// 5. Spectrum of ad_x purely imaginary on every Vaisman grid algebra.
Result spectrum_obstruction() {
  Result r;
  for (const auto& c : grid()) {
    const auto s = hermitian::spectrum_all_imaginary(hermitian::construct_vaisman(c.p).g, 100, 1);
    if (!s.pass) fail(r, c.label + ": witness " + (s.witness ? exact::to_string(*s.witness) : "?"));
  }
  const auto ctrl = liealg::direct_sum(testsupport::aff_r(), LieAlgebra::abelian(2));
  const auto neg = hermitian::spectrum_all_imaginary(ctrl, 100, 1);
  if (neg.pass || !neg.witness) fail(r, "aff(R) + R^2 control passed");
  if (r.pass) r.detail = "control witness " + exact::to_string(*neg.witness);
  return r;
}

// 6. H_1 of the lattices.
lattices::AbelianGroup expected_closed_form(const std::vector<Integer>& a, long k, int m) {
  const std::size_t n = a.size();
  std::size_t p = 0, c = 0, d = 0;
  for (const auto& x : a) {
    Integer r4 = x % 4;
    if (r4 < 0) r4 += 4;
    if (r4 % 2 == 0) ++p;
    if (r4 == 0) ++c;
    if (r4 == 2) ++d;
  }
  std::vector<Integer> torsion{Integer(2 * k)};
  std::size_t free = 0, twos = 0;
  if (m == 4) {
    free = 2 * n + 1;
  } else if (m == 2) {
    free = 1 + 2 * p;
    twos = 2 * (n - p);
  } else {
    free = 1 + 2 * c;
    twos = 2 * d + (n - c - d);
  }
  torsion.insert(torsion.end(), twos, Integer(2));
  return lattices::abelian_group(free, torsion);
}

// Rows of the two dim-6 tables: H_1 = Z^free + Z_2k + Z_2^twos by residue of ab.
lattices::AbelianGroup expected_table(long a, long b, long k, int m) {
  const long ab = ((a * b) % 4 + 4) % 4;
  std::size_t free = 1, twos = 0;
  if (m == 2) {
    if (ab % 2 == 1) twos = 4;
    else free = 3, twos = 2;
  } else if (m == 1) {
    if (ab % 2 == 1) twos = 2;
    else if (ab == 2) twos = 3;
    else free = 3, twos = 1;
  } else {
    free = 5;
  }
  std::vector<Integer> torsion{Integer(2 * k)};
  torsion.insert(torsion.end(), twos, Integer(2));
  return lattices::abelian_group(free, torsion);
}

Result h1_tables() {
  Result r;
  std::size_t instances = 0;
  for (int m : {1, 2, 4})
    for (long a = 0; a < 8; ++a)
      for (long b = 0; b < 8; ++b) {
        if (a % 2 == 0 && b % 2 == 0) continue;
        for (long k = 1; k <= 3; ++k) {
          const auto lp = lattices::lattice_presentation_oscillator({Integer(a), Integer(b)}, Integer(k), {m});
          const auto got = lattices::abelianization(lp);
          ++instances;
          if (!(got == expected_table(a, b, k, m)))
            fail(r, "table m=" + std::to_string(m) + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                        ") k=" + std::to_string(k) + ": " + lattices::to_string(got));
        }
      }
  std::set<std::pair<int, std::size_t>> betti_seen;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : tuples(n, {0, 1, 2, 3})) {
      std::vector<Integer> a;
      for (const auto& x : t) a.push_back(x.get_num());
      if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x % 2 == 0; })) continue;
      for (long k = 1; k <= 3; ++k)
        for (int m : {1, 2, 4}) {
          const auto got = lattices::abelianization(lattices::lattice_presentation_oscillator(a, Integer(k), {m}));
          ++instances;
          if (!(got == expected_closed_form(a, k, m))) {
            fail(r, "closed form m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + lattices::to_string(got));
          }
          betti_seen.insert({m, lattices::betti1(got)});
        }
    }
  // b_1 = 2p + 1 and 2c + 1 take every odd value 1..2n+1 across the grid.
  for (int m : {1, 2})
    for (std::size_t b = 1; b <= 7; b += 2)
      if (!betti_seen.count({m, b})) fail(r, "b_1 = " + std::to_string(b) + " never seen for m = " + std::to_string(m));
  for (int m : {1, 2}) {
    const auto t = lattices::dim6_table({m});
    for (const auto& row : t.rows)
      if (!row.matches) fail(r, "table row " + row.residue + " does not match");
  }
  if (r.pass) r.detail = std::to_string(instances) + " presentations";
  return r;
}

// 7. Vaisman -> coKahler -> central extension -> complete LSA.
Result cokahler_chain() {
  Result r;
  std::size_t symbolic = 0;
  for (const auto& c : grid()) {
    try {
      const auto h = hermitian::construct_vaisman(c.p);
      const auto red = contact::vaisman_to_cokahler(h);
      const auto v = contact::contact_verdict(red.d);
      if (!v.is_cokahler) fail(r, c.label + ": coKahler verdict false");
      if (!metricgeo::is_flat(red.d.g, red.d.m).flat) fail(r, c.label + ": d not flat");
      // Extension basis (A, k..., JA) against the canonical (A, JA, k...).
      const std::size_t n = h.g.dim();
      Matrix perm(n, n);
      perm(0, 0) = 1;
      for (std::size_t i = 2; i < n; ++i) perm(i, i - 1) = 1;
      perm(1, n - 1) = 1;
      if (!(h.g.change_basis(red.reduction.basis_change * perm) == red.extension))
        fail(r, c.label + ": central extension differs from the input");

      const auto lsa = contact::lsa_from_central_extension(red.d.g, red.d.m, red.d.Phi, "JA");
      const auto chk = contact::check_lsa(lsa);
      if (!chk.torsion || !chk.left_symmetric) fail(r, c.label + ": LSA identity fails: " + chk.violation);
      if (!(lsa.algebra() == red.extension)) fail(r, c.label + ": LSA lives on another algebra");
      const auto comp = contact::lsa_completeness(lsa, 100, 1);
      if (!comp.no_witness) fail(r, c.label + ": completeness witness " + exact::to_string(*comp.witness));
      if (comp.symbolic_unit_determinant) {
        ++symbolic;
        if (!*comp.symbolic_unit_determinant) fail(r, c.label + ": det(I + rho(x)) not identically 1");
      }
    } catch (const std::exception& e) {
      fail(r, c.label + ": " + e.what());
    }
  }
  if (r.pass) r.detail = std::to_string(grid().size()) + " chains, " + std::to_string(symbolic) + " with symbolic det = 1";
  return r;
}

// 8. Separation of the dim-6 families.
Result classification() {
  Result r;
  const std::vector<Rational> r_grid{0, Rational(1, 3), Rational(1, 2), Rational(2, 3), 1};
  const auto rep = classify::separate(classify::dim6_catalogue(r_grid));
  if (!rep.profiles_match_prediction) fail(r, "nilradical profiles disagree with the case analysis");
  for (const auto& p : rep.pairs) {
    if (!p.components.empty()) continue;
    std::string why = classify::name(p.a) + " and " + classify::name(p.b) + " share every invariant";
    if (p.isomorphism) {
      const bool iso = classify::build_family(p.a).structure.g.change_basis(*p.isomorphism) ==
                       classify::build_family(p.b).structure.g;
      why += std::string("; explicit isomorphism P = ") + matrix_string(*p.isomorphism) +
             (iso ? " verified" : " NOT verified");
    }
    fail(r, why);
  }
  if (r.pass) r.detail = std::to_string(rep.pairs.size()) + " pairs separated";
  return r;
}

// 9. Nilradical against the span of ad-nilpotent integer points. Eigenvalues
// of ad_x vanish on g' for solvable g, so the search runs over integer points
// of a coordinate complement of g' (spanned by all brackets of basis vectors).
Result nilradical_oracle() {
  Result r;
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 50; ++t) {
    const LieAlgebra g = testsupport::random_solvable_algebra(rng, 6);
    const std::size_t n = g.dim();
    const Subspace lib = liealg::nilradical(g);

    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) brackets.push_back(g.bracket_basis(i, j));
    Subspace span(n, brackets);
    const Subspace derived = span;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector e = exact::unit_vector(n, i);
      if (span.contains(e)) continue;
      free.push_back(i);
      span = span.sum(Subspace(n, {e}));
    }
    const std::size_t q = free.size();
    const long bound = q <= 2 ? 20 : q == 3 ? 8 : q == 4 ? 4 : 2;
    std::vector<long> values;
    for (long v = -bound; v <= bound; ++v) values.push_back(v);

    std::vector<Vector> points = derived.basis();
    for (const auto& c : tuples(q, values)) {
      Vector x(n, Rational(0));
      for (std::size_t i = 0; i < q; ++i) x[free[i]] = c[i];
      const bool nil = testsupport::ad_nilpotent(g, x);
      if (nil) points.push_back(x);
      if (nil != lib.contains(x)) {
        fail(r, "algebra " + std::to_string(t) + ": membership differs at " + exact::to_string(x));
        break;
      }
    }
    const Subspace brute(n, points);
    if (!(brute == lib))
      fail(r, "algebra " + std::to_string(t) + ": dim " + std::to_string(lib.dim()) + " vs brute " +
                  std::to_string(brute.dim()));
  }
  if (r.pass) r.detail = "50 algebras";
  return r;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Result()> run;
  double budget;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "standard structure on R x h_{2n+1}", example_reproduction, 1},
      {2, "double extension is Vaisman on the package grid", double_extension_verdict, 30},
      {3, "reduction after construction is the identity", reduction_round_trip, 30},
      {4, "unimodular Kahler vs flat", kahler_flat_oracles, 30},
      {5, "imaginary spectrum of Vaisman algebras", spectrum_obstruction, 60},
      {6, "H_1 tables and closed forms", h1_tables, 10},
      {7, "coKahler reduction and complete LSA", cokahler_chain, 30},
      {8, "dim-6 families separated by invariants", classification, 60},
      {9, "nilradical against brute-force ad-nilpotency", nilradical_oracle, 60},
  };
  if (only != 0 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    r = within(r, seconds_since(t0), c.budget);
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << ": " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
