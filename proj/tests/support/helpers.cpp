#include "helpers.hpp"

#include "vaisman/exact/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace testsupport {

using vaisman::exact::Subspace;

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Vector vec(std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return q(num(rng), den(rng));
}

Vector random_vector(std::mt19937_64& rng, std::size_t n, int num_bound, int den_bound) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, num_bound, den_bound));
  return v;
}

Matrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

LieAlgebra matrix_lie_closure(const std::vector<Matrix>& gens, std::size_t max_dim) {
  std::vector<Matrix> basis;
  const std::size_t sz = gens.front().rows() * gens.front().cols();
  Subspace span(sz);
  auto add = [&](const Matrix& m) {
    if (basis.size() >= max_dim) return false;
    if (span.contains(m.data())) return false;
    span = span.sum(Subspace(sz, {m.data()}));
    basis.push_back(m);
    return true;
  };
  for (const auto& g : gens) add(g);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t cur = basis.size();
    for (std::size_t i = 0; i < cur; ++i)
      for (std::size_t j = i + 1; j < cur; ++j)
        if (add(vaisman::exact::commutator(basis[i], basis[j]))) grew = true;
  }
  // Must be closed: verify, else truncation broke it.
  const std::size_t n = basis.size();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.data());
  const Matrix P = Matrix::from_columns(cols, sz);
  LieAlgebra g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = P.solve(vaisman::exact::commutator(basis[i], basis[j]).data());
      if (!c) throw std::runtime_error("closure truncated");
      g.set_bracket(i, j, *c);
    }
  return g;
}

LieAlgebra random_solvable_algebra(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<int> size_d(3, 4), ngen(2, 3), entry(-2, 2), coin(0, 2);
  for (;;) {
    const std::size_t m = static_cast<std::size_t>(size_d(rng));
    std::vector<Matrix> gens;
    const int k = ngen(rng);
    for (int t = 0; t < k; ++t) {
      Matrix a(m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = r; c < m; ++c)
          if (coin(rng) != 0) a(r, c) = entry(rng);
      gens.push_back(a);
    }
    try {
      LieAlgebra g = matrix_lie_closure(gens, 64);
      if (g.dim() >= 2 && g.dim() <= max_dim) return g;
    } catch (const std::runtime_error&) {
    }
  }
}

Rational det_by_permutations(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Rational prod = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m(i, p[i]);
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::size_t rank_by_minors(const Matrix& m) {
  const std::size_t maxk = std::min(m.rows(), m.cols());
  std::size_t best = 0;
  for (std::size_t k = 1; k <= maxk; ++k) {
    bool found = false;
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 0; i < m.rows(); ++i)
          if (rsel[i]) rs.push_back(i);
        for (std::size_t i = 0; i < m.cols(); ++i)
          if (csel[i]) cs.push_back(i);
        if (det_by_permutations(m.submatrix(rs, cs)) != 0) found = true;
      } while (!found && std::prev_permutation(csel.begin(), csel.end()));
    } while (!found && std::prev_permutation(rsel.begin(), rsel.end()));
    if (!found) break;
    best = k;
  }
  return best;
}

Vector poly_coeffs_by_interpolation(const Matrix& m) {
  // det(tI - m) sampled at t = 0..n, then Lagrange/Vandermonde solve.
  const std::size_t n = m.rows();
  Matrix vander(n + 1, n + 1);
  Vector vals(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    const Rational t(static_cast<long>(s));
    Matrix a = t * Matrix::identity(n) - m;
    vals[s] = a.determinant();
    Rational pw = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      vander(s, k) = pw;
      pw *= t;
    }
  }
  return *vander.solve(vals);
}

bool ad_nilpotent(const LieAlgebra& g, const Vector& x) {
  return vaisman::exact::power(g.ad(x), static_cast<unsigned>(g.dim())).is_zero();
}

LieAlgebra heisenberg(std::size_t n) {
  std::vector<std::string> lab;
  for (std::size_t i = 1; i <= n; ++i) lab.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) lab.push_back("y" + std::to_string(i));
  lab.push_back("z");
  LieAlgebra g(2 * n + 1, lab);
  for (std::size_t i = 0; i < n; ++i) g.set_bracket(i, n + i, vaisman::exact::unit_vector(2 * n + 1, 2 * n));
  return g;
}

LieAlgebra r_times_heisenberg(std::size_t n) {
  LieAlgebra h = heisenberg(n);
  LieAlgebra w(1, {"w"});
  return vaisman::liealg::direct_sum(h, w);
}

LieAlgebra aff_r() {
  LieAlgebra g(2, {"h", "e"});
  g.set_bracket(0, 1, vec({0, 1}));
  return g;
}

LieAlgebra e2_type() {
  LieAlgebra g(3, {"H", "e", "f"});
  g.set_bracket(0, 1, vec({0, 0, 1}));
  g.set_bracket(0, 2, vec({0, -1, 0}));
  return g;
}

}  // namespace testsupport
