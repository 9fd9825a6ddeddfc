#include <doctest.h>

#include "helpers.hpp"
#include "vaisman/hermitian/examples.hpp"
#include "vaisman/liealg/structure.hpp"
#include "vaisman/metricgeo/flat.hpp"

#include <cmath>

using namespace vaisman::metricgeo;
using vaisman::exact::Matrix;
using vaisman::exact::Rational;
using vaisman::exact::Subspace;
using vaisman::exact::unit_vector;
using testsupport::q;
using testsupport::vec;

namespace {

LieAlgebra k2() { return vaisman::hermitian::one_h_package(0, {Rational(1)}, {Rational(0)}).k; }

Matrix rotation_on(std::size_t n, std::size_t i, const Rational& a) {
  Matrix m = Matrix::zero(n, n);
  m(i + 1, i) = a;
  m(i, i + 1) = -a;
  return m;
}

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(Metric(Matrix{{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Metric(Matrix{{1, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Metric(Matrix{{0, 0}, {0, 1}}), std::invalid_argument);
  const Metric m(Matrix{{2, 1}, {1, 2}});
  CHECK(m.inverse() * m.gram() == Matrix::identity(2));
  CHECK(m.sharp(m.flat(vec({3, -1}))) == vec({3, -1}));
}

TEST_CASE("Levi-Civita examples") {
  const auto ab = levi_civita(LieAlgebra::abelian(4), Metric::identity(4));
  for (const auto& n : ab.nabla) CHECK(n.is_zero());

  const auto h3 = testsupport::heisenberg(1);
  const auto c = levi_civita(h3, Metric::identity(3));
  CHECK(c.nabla[0].column(1) == vec({0, 0, 0}) + q(1, 2) * unit_vector(3, 2));
  const auto fl = is_flat(h3, Metric::identity(3));
  CHECK_FALSE(fl.flat);
  REQUIRE(fl.witness.has_value());
  const Matrix r = curvature(h3, c, unit_vector(3, 0), unit_vector(3, 1));
  CHECK(r.column(1)[0] == q(3, 4));

  const auto e2 = testsupport::e2_type();
  const auto ce = levi_civita(e2, Metric::identity(3));
  CHECK(ce.nabla[0] == e2.ad_basis(0));
  CHECK(is_flat(e2, Metric::identity(3)).flat);
}

TEST_CASE("connection identities on random metrics") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    const auto g = testsupport::random_solvable_algebra(rng, 5);
    const std::size_t n = g.dim();
    // Gram matrix P^T P with P unit upper triangular.
    Matrix p = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) p(i, j) = testsupport::random_rational(rng, 3, 2);
    const Metric m(p.transpose() * p);
    const auto c = levi_civita(g, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(c.nabla[i].column(j) - c.nabla[j].column(i) == g.bracket_basis(i, j));
        for (std::size_t k = 0; k < n; ++k)
          CHECK(m.inner(c.nabla[i].column(j), unit_vector(n, k)) == -m.inner(unit_vector(n, j), c.nabla[i].column(k)));
      }
  }
}

TEST_CASE("codifferential") {
  const auto ab = LieAlgebra::abelian(4);
  KForm w(4, 2);
  w.set_on_basis({0, 1}, 1);
  w.set_on_basis({2, 3}, 3);
  CHECK(codifferential(ab, Metric::identity(4), w).is_zero());

  // R x h3: delta omega(x) = 1/2 sum_i <[J e_i, e_i], x> over an orthonormal basis.
  const auto h = vaisman::hermitian::heisenberg_example(1);
  const KForm dw = codifferential(h.g, h.m, h.omega);
  Vector expect = vaisman::exact::zero_vector(4);
  for (std::size_t i = 0; i < 4; ++i) expect = expect + q(1, 2) * h.g.bracket(h.J.column(i), unit_vector(4, i));
  CHECK(dw.as_vector() == expect);

  // The dual of the central z is parallel, so its codifferential vanishes.
  CHECK(codifferential(h.g, h.m, KForm::dual_basis(4, 2)).is_zero());

  // Gram-matrix form agrees with an orthonormal change of basis.
  const Matrix p{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const auto g2 = h.g.change_basis(p);
  const Metric m2(p.transpose() * p);
  const KForm w2 = h.omega.pullback(p);
  CHECK(codifferential(g2, m2, w2) == dw.pullback(p));
}

TEST_CASE("flat decompositions") {
  const auto d4 = flat_decomposition(LieAlgebra::abelian(4), Metric::identity(4));
  CHECK(d4.z.dim() == 4);
  CHECK(d4.h.dim() == 0);
  CHECK(d4.kprime.dim() == 0);

  const auto e2 = flat_decomposition(testsupport::e2_type(), Metric::identity(3));
  CHECK(e2.z.dim() == 0);
  CHECK(e2.h == Subspace(3, {unit_vector(3, 0)}));
  CHECK(e2.kprime.dim() == 2);

  const auto k = k2();
  const auto dk = flat_decomposition(k, Metric::identity(4));
  CHECK(dk.z.dim() == 1);
  CHECK(dk.h.dim() == 1);
  CHECK(dk.kprime.dim() == 2);
  for (const auto& p : flat_properties(k, Metric::identity(4), dk)) CHECK_MESSAGE(p.pass, p.name);

  CHECK_THROWS_AS(flat_decomposition(testsupport::heisenberg(1), Metric::identity(3)), std::invalid_argument);
}

TEST_CASE("flat algebras are unimodular and solvable") {
  // Semidirect products of R^2 by rotations and R^4 by commuting rotations.
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const auto p = vaisman::hermitian::one_h_package(1, {Rational(a)}, {Rational(b), Rational(1)});
      REQUIRE(is_flat(p.k, p.m).flat);
      CHECK(vaisman::liealg::is_unimodular(p.k));
      CHECK(vaisman::liealg::is_solvable(p.k));
      const auto fd = flat_decomposition(p.k, p.m);
      for (const auto& x : fd.z.sum(fd.kprime).basis()) CHECK(levi_civita(p.k, p.m).along(x).is_zero());
      for (const auto& x : fd.h.basis()) CHECK_FALSE(levi_civita(p.k, p.m).along(x).is_zero());
    }
}

TEST_CASE("restrict_to") {
  const Matrix t = rotation_on(3, 1, 2);
  const Subspace s(3, {unit_vector(3, 1), unit_vector(3, 2)});
  CHECK(restrict_to(t, s) == (Matrix{{0, -2}, {2, 0}}));
  CHECK_THROWS_AS(restrict_to(t, Subspace(3, {unit_vector(3, 1)})), std::invalid_argument);
}

TEST_CASE("adapted block basis") {
  const Subspace plane = Subspace::whole(2);
  const auto one = adapted_block_basis(Metric::identity(2), plane, {rotation_on(2, 0, 1)});
  REQUIRE(one.params.size() == 1);
  CHECK(std::abs(one.params[0][0] - 1.0) < 1e-9);
  CHECK(one.residual < 1e-9);

  // Oscillator (1, 2): D on R^4 with J as a second operator.
  const auto p = vaisman::hermitian::abelian_package({Rational(1), Rational(2)});
  const auto osc = adapted_block_basis(p.m, Subspace::whole(4), {p.D, p.J});
  std::vector<double> blocks = osc.params[0];
  std::sort(blocks.begin(), blocks.end());
  CHECK(std::abs(blocks[0] - 1.0) < 1e-9);
  CHECK(std::abs(blocks[1] - 2.0) < 1e-9);

  // Conjugate two commuting rotations by an invertible rational matrix and
  // hand over the transported metric.
  const Matrix r1 = rotation_on(4, 0, 3) + rotation_on(4, 2, 1);
  const Matrix r2 = rotation_on(4, 0, -1) + rotation_on(4, 2, 5);
  const Matrix s{{1, 2, 0, 1}, {0, 1, 3, 0}, {1, 0, 1, 2}, {0, 1, 0, 1}};
  const Matrix si = s.inverse();
  const Metric m(si.transpose() * si);
  const auto conj = adapted_block_basis(m, Subspace::whole(4), {s * r1 * si, s * r2 * si});
  std::vector<std::pair<double, double>> got;
  for (std::size_t i = 0; i < 2; ++i) got.emplace_back(conj.params[0][i], conj.params[1][i]);
  std::sort(got.begin(), got.end());
  CHECK(std::abs(got[0].first - 1.0) < 1e-6);
  CHECK(std::abs(got[0].second - 5.0) < 1e-6);
  CHECK(std::abs(got[1].first - 3.0) < 1e-6);
  CHECK(std::abs(got[1].second + 1.0) < 1e-6);

  // Non-commuting input is rejected exactly.
  const Matrix x{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};
  const Matrix y{{0, 0, -1}, {0, 0, 0}, {1, 0, 0}};
  CHECK_THROWS_AS(adapted_block_basis(Metric::identity(3), Subspace::whole(3), {x, y}), std::invalid_argument);

  // Decomposition variant on k2: lambda(H) = +-1 for the single block.
  const auto pk = vaisman::hermitian::one_h_package(0, {Rational(1)}, {Rational(2)});
  const auto fd = flat_decomposition(pk.k, pk.m);
  const auto ab = adapted_block_basis(pk.k, pk.m, fd, {pk.D});
  REQUIRE(ab.lambdas.size() == 1);
  CHECK(std::abs(std::abs(ab.lambdas[0][0]) - 1.0) < 1e-9);
}
