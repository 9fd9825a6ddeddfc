#include <doctest.h>

#include "helpers.hpp"
#include "vaisman/hermitian/hermitian.hpp"
#include "vaisman/lattices/lattices.hpp"
#include "vaisman/liealg/structure.hpp"

#include <functional>

using namespace vaisman::lattices;
using vaisman::all_pass;
using testsupport::q;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

AbelianGroup group(std::size_t free, std::initializer_list<long> orders) { return abelian_group(free, ints(orders)); }

// Invariant factors from determinantal divisors: d_i = g_i / g_{i-1}, g_i the gcd of i x i minors.
AbelianGroup abelianization_by_minors(const IntMatrix& m) {
  const auto rm = m.to_rational();
  std::vector<Integer> g{Integer(1)};
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t s = 1; s <= top; ++s) {
    Integer acc = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t, std::vector<std::vector<std::size_t>>&)> pick =
        [&](std::size_t start, std::vector<std::size_t>& cur, std::size_t n, std::vector<std::vector<std::size_t>>& out) {
          if (cur.size() == s) {
            out.push_back(cur);
            return;
          }
          for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            pick(i + 1, cur, n, out);
            cur.pop_back();
          }
        };
    std::vector<std::vector<std::size_t>> rs, cs;
    pick(0, rows, m.rows(), rs);
    pick(0, cols, m.cols(), cs);
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Rational d = testsupport::det_by_permutations(rm.submatrix(r, c));
        acc = vaisman::exact::gcd(acc, d.get_num());
      }
    if (acc == 0) break;
    g.push_back(acc);
  }
  AbelianGroup out;
  out.rank = m.cols() - (g.size() - 1);
  for (std::size_t i = 1; i < g.size(); ++i) {
    Integer f = g[i] / g[i - 1];
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("oscillator parameter normalization") {
  CHECK(normalize(rats({2, 4})).a == ints({1, 2}));
  CHECK(normalize({q(1, 2), q(1, 3)}).a == ints({2, 3}));
  CHECK(normalize(rats({-1, -2})).a == ints({1, 2}));
  CHECK(normalize(rats({2, 0})).a == ints({0, 1}));
  CHECK(normalize({q(1, 2), q(1, 3)}).original[0] == q(1, 2));
  CHECK_THROWS_AS(normalize(rats({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(normalize({}), std::invalid_argument);

  CHECK(oscillator_isomorphic(normalize(rats({1, 2})), normalize(rats({2, 4}))));
  CHECK_FALSE(oscillator_isomorphic(normalize(rats({1, 1})), normalize(rats({1, 2}))));
  CHECK(oscillator_isomorphic(normalize(rats({1})), normalize(rats({1}))));

  // Equivalence relation and scaling invariance on a small grid.
  std::vector<OscillatorParams> ps;
  for (long a = -2; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) ps.push_back(normalize(rats({a, b})));
  for (const auto& p : ps) {
    CHECK(oscillator_isomorphic(p, p));
    std::vector<Rational> scaled;
    for (const auto& x : p.a) scaled.push_back(q(3, 7) * Rational(x));
    CHECK(oscillator_isomorphic(p, normalize(scaled)));
    for (const auto& r : ps) {
      CHECK(oscillator_isomorphic(p, r) == oscillator_isomorphic(r, p));
      for (const auto& s : ps)
        if (oscillator_isomorphic(p, r) && oscillator_isomorphic(r, s)) CHECK(oscillator_isomorphic(p, s));
    }
  }
}

TEST_CASE("oscillator algebras carry Vaisman structures") {
  for (const auto& a : {rats({1}), rats({1, 1}), rats({1, 2}), rats({0, 1}), rats({1, 2, 3})}) {
    const auto h = oscillator_algebra(normalize(a));
    CHECK(h.g.dim() == 2 * a.size() + 2);
    CHECK(h.g.labels()[0] == "A");
    CHECK(h.g.labels()[1] == "B");
    const auto v = vaisman::hermitian::lck_verdict(h);
    CHECK(v.is_vaisman);
    CHECK(vaisman::liealg::is_unimodular(h.g));
    CHECK(vaisman::liealg::is_solvable(h.g));
    CHECK_FALSE(vaisman::liealg::is_nilpotent(h.g));
  }
  CHECK_THROWS_AS(oscillator_algebra(OscillatorParams{ints({0, 0}), {}}), std::invalid_argument);
}

TEST_CASE("rotation matrices") {
  CHECK(rotation_matrix(ints({1}), {2}) == IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  CHECK(rotation_matrix(ints({1, 2}), {1}) ==
        IntMatrix{{1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}});
  CHECK(rotation_matrix(ints({3, -1, 2}), {4}) == IntMatrix::identity(7));
  CHECK(rotation_matrix(ints({-1}), {1}) == rotation_matrix(ints({3}), {1}));
  // The lattice is preserved, in both directions.
  for (int m : {1, 2, 4})
    for (long a = -3; a <= 3; ++a) {
      const auto det = rotation_matrix(ints({a, 1}), {m}).to_rational().determinant();
      CHECK(det == 1);
    }
}

TEST_CASE("Heisenberg lattices") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (long k = 1; k <= 4; ++k) {
      const auto g = abelianization(heisenberg_lattice(n, k));
      CHECK(g == group(2 * n, {2 * k}));
    }
  CHECK(abelianization(heisenberg_lattice(2, 2)) != abelianization(heisenberg_lattice(2, 3)));
  CHECK_THROWS_AS(heisenberg_lattice(1, 0), std::invalid_argument);
}

TEST_CASE("oscillator lattice examples") {
  CHECK(abelianization(lattice_presentation_oscillator(ints({1, 1}), 1, {2})) == group(1, {2, 2, 2, 2, 2}));
  CHECK(abelianization(lattice_presentation_oscillator(ints({1, 2}), 1, {2})) == group(3, {2, 2, 2}));
  CHECK(abelianization(lattice_presentation_oscillator(ints({1, 1}), 1, {1})) == group(1, {2, 2, 2}));
  CHECK(abelianization(lattice_presentation_oscillator(ints({1}), 3, {2})) == group(1, {6, 2, 2}));
  CHECK(to_string(abelianization(lattice_presentation_oscillator(ints({1}), 3, {2}))) == "Z + Z_2^2 + Z_6");
  for (long k = 1; k <= 3; ++k) {
    const auto lp = lattice_presentation_oscillator(ints({1, 2, 3}), k, {4});
    CHECK(lp.levels[0].action == IntMatrix::identity(lp.generators.size()));
    CHECK(abelianization(lp) == group(7, {2 * k}));
  }
  const auto lp = lattice_presentation_oscillator(ints({1, 2}), 2, {1});
  CHECK(lp.generators == std::vector<std::string>{"t", "z", "x1", "y1", "x2", "y2"});
  CHECK(all_pass(validate(lp)));
  CHECK_THROWS_AS(lattice_presentation_oscillator(ints({0}), 1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(lattice_presentation_oscillator(ints({1}), 0, {1}), std::invalid_argument);
}

TEST_CASE("trivial presentations and group normal form") {
  LatticePresentation lp;
  lp.generators = {"a", "b", "c"};
  CHECK(abelianization(lp) == group(3, {}));
  CHECK(betti1(abelianization(lp)) == 3);
  CHECK(to_string(group(0, {})) == "0");
  CHECK(group(0, {2, 3}) == group(0, {6}));
  CHECK(group(1, {0}) == group(2, {}));
  CHECK(to_string(group(2, {4, 2})) == "Z^2 + Z_2 + Z_4");
  lp.relations.push_back(ints({2, 4, 0}));
  CHECK(abelianization(lp) == group(2, {2}));
  lp.relations.push_back(ints({1}));
  CHECK_THROWS_AS(abelianization(lp), std::invalid_argument);
}

TEST_CASE("abelianization agrees with the closed forms") {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Integer> a(n, Integer(0));
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == n) {
        if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x % 2 == 0; })) return;
        for (long k = 1; k <= 3; ++k)
          for (int m : {1, 2, 4}) {
            const auto lp = lattice_presentation_oscillator(a, k, {m});
            const auto g = abelianization(lp);
            CHECK(g == oscillator_h1_closed_form(a, k, {m}));
            ++count;
          }
        return;
      }
      for (long v = 0; v < 4; ++v) {
        a[i] = v;
        walk(i + 1);
      }
    };
    walk(0);
  }
  CHECK(count > 2000);

  // Betti numbers 2p+1 and 2c+1.
  CHECK(betti1(abelianization(lattice_presentation_oscillator(ints({0, 2, 1}), 1, {2}))) == 5);
  CHECK(betti1(abelianization(lattice_presentation_oscillator(ints({0, 2, 1}), 1, {1}))) == 3);
  CHECK(betti1(abelianization(lattice_presentation_oscillator(ints({4, 0, 3}), 2, {1}))) == 5);
  CHECK_THROWS_AS(oscillator_h1_closed_form(ints({2}), 1, {2}), std::invalid_argument);
  CHECK_THROWS_AS(oscillator_h1_closed_form(ints({1}), 1, {3}), std::invalid_argument);
}

TEST_CASE("Smith form abelianization matches determinantal divisors") {
  for (long a = -3; a <= 3; ++a)
    for (long k = 1; k <= 3; ++k)
      for (int m : {1, 2, 3, 4}) {
        if (a == 0) continue;
        const auto lp = lattice_presentation_oscillator(ints({a}), k, {m});
        CHECK(abelianization(lp) == abelianization_by_minors(relation_matrix(lp)));
      }
  const auto tw = lattice_presentation_tower(0, 1, ints({1}), ints({1}), 2, {2}, {1});
  CHECK(abelianization(tw) == abelianization_by_minors(relation_matrix(tw)));
}

TEST_CASE("dim-6 tables") {
  for (int m : {1, 2}) {
    const auto t = dim6_table({m});
    CHECK(t.rows.size() == (m == 2 ? 2u : 3u));
    for (const auto& r : t.rows) {
      CHECK(r.matches);
      for (const auto& g : r.computed) CHECK(betti1(g) == r.b1);
    }
    CHECK(render(t) == render(dim6_table({m})));
  }
  const auto half = dim6_table({2});
  CHECK(half.rows[0].computed[0] == group(1, {2, 2, 2, 2, 2}));
  CHECK(half.rows[1].computed[2] == group(3, {6, 2, 2}));
  const auto quarter = dim6_table({1});
  CHECK(quarter.rows[0].computed[1] == group(1, {4, 2, 2}));
  CHECK(quarter.rows[1].computed[0] == group(1, {2, 2, 2, 2}));
  CHECK(quarter.rows[2].computed[2] == group(3, {6, 2}));
  CHECK(render(quarter).find("| ab = 2 (mod 4) ") != std::string::npos);
  CHECK_THROWS_AS(dim6_table({4}), std::invalid_argument);
}

TEST_CASE("tower lattices") {
  // Shear: (psi(j) - I) applied to Zg is z^{2k}.
  for (long k = 1; k <= 3; ++k) {
    const auto lp = lattice_presentation_tower(0, 1, ints({1}), ints({1}), k, {4}, {2});
    CHECK(lp.generators == std::vector<std::string>{"r", "s", "Zg", "z", "u1", "v1"});
    const auto& psi = lp.levels[0].action;
    CHECK(lp.levels[0].generator == 1);
    for (std::size_t r = 0; r < 6; ++r) CHECK(psi(r, 2) - (r == 2 ? 1 : 0) == (r == 3 ? 2 * k : 0));
    CHECK(all_pass(validate(lp)));
    // Half turn on u, v: Z + Z + Z + Z_2k + Z_2^2 (r, s, Zg free).
    CHECK(abelianization(lp) == group(3, {2 * k, 2, 2}));
  }
  // Full turns: only the shear acts.
  for (std::size_t l = 0; l <= 1; ++l) {
    const auto lp = lattice_presentation_tower(l, 1, ints({2}), std::vector<Integer>(l + 1, Integer(1)), 2, {4}, {4});
    const auto g = abelianization(lp);
    CHECK(g == group(lp.generators.size() - 1, {4}));
  }
  const auto lp = lattice_presentation_tower(1, 1, ints({1}), ints({0, 1}), 1, {2}, {1});
  CHECK(all_pass(validate(lp)));
  CHECK_THROWS_AS(lattice_presentation_tower(0, 1, ints({0}), ints({1}), 1, {4}, {4}), std::invalid_argument);
  CHECK_THROWS_AS(lattice_presentation_tower(0, 1, ints({1}), ints({1, 1}), 1, {4}, {4}), std::invalid_argument);

  // A broken action is caught by validation.
  auto bad = lattice_presentation_oscillator(ints({1}), 1, {1});
  bad.levels[0].action(2, 3) = 5;
  CHECK_FALSE(all_pass(validate(bad)));
}
