#include "vaisman/liealg/structure.hpp"

namespace vaisman::liealg {

namespace {

Vector flatten(const Matrix& m) { return m.data(); }

}  // namespace

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // x is central iff sum_i x_i c(i, j, k) = 0 for all j, k.
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = g.c(i, j, k);
  return Subspace(n, exact::kernel_basis(m));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> out;
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) out.push_back(g.bracket(a, b));
  return Subspace(g.dim(), out);
}

Subspace derived_algebra(const LieAlgebra& g) {
  const Subspace all = Subspace::whole(g.dim());
  return bracket_span(g, all, all);
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.ad_basis(i).trace() != 0) return false;
  return true;
}

namespace {

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> s{Subspace::whole(g.dim())};
  for (;;) {
    Subspace next = bracket_span(g, s.back(), s.back());
    if (next.dim() == s.back().dim()) break;
    s.push_back(next);
    if (next.dim() == 0) break;
  }
  return s;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace all = Subspace::whole(g.dim());
  std::vector<Subspace> s{all};
  for (;;) {
    Subspace next = bracket_span(g, all, s.back());
    if (next.dim() == s.back().dim()) break;
    s.push_back(next);
    if (next.dim() == 0) break;
  }
  return s;
}

}  // namespace

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

std::vector<Matrix> associative_closure(const std::vector<Matrix>& generators) {
  std::vector<Matrix> basis;
  if (generators.empty()) return basis;
  const std::size_t rows = generators.front().rows(), cols = generators.front().cols();
  // Echelon rows of flattened basis elements, kept for independence tests.
  Subspace span(rows * cols);
  std::vector<std::size_t> frontier;
  auto try_add = [&](const Matrix& m) {
    const Vector v = flatten(m);
    if (span.contains(v)) return;
    span = span.sum(Subspace(rows * cols, {v}));
    basis.push_back(m);
    frontier.push_back(basis.size() - 1);
  };
  for (const auto& gmat : generators) try_add(gmat);
  while (!frontier.empty()) {
    std::vector<std::size_t> current;
    current.swap(frontier);
    for (std::size_t idx : current)
      for (const auto& gmat : generators) try_add(gmat * basis[idx]);
  }
  return basis;
}

Subspace nilradical(const LieAlgebra& g) {
  if (!is_solvable(g)) throw Unsupported("nilradical is only implemented for solvable algebras");
  const std::size_t n = g.dim();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(g.ad_basis(i));
  const auto a = associative_closure(gens);
  Matrix m(a.size(), n);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = (gens[k] * a[j]).trace();
  return Subspace(n, exact::kernel_basis(m));
}

std::optional<std::pair<std::size_t, std::size_t>> heisenberg_profile(const LieAlgebra& n) {
  const Subspace d = derived_algebra(n);
  if (d.dim() != 1) return std::nullopt;
  const Subspace z = center(n);
  if (!z.contains(d)) return std::nullopt;
  return std::make_pair(z.dim() - 1, (n.dim() - z.dim()) / 2);
}

StructureReport analyze(const LieAlgebra& g) {
  StructureReport r;
  r.center = center(g);
  r.derived = derived_algebra(g);
  r.derived_series = derived_series(g);
  r.lower_central_series = lower_central_series(g);
  r.solvable = r.derived_series.back().dim() == 0;
  r.nilpotent = r.lower_central_series.back().dim() == 0;
  r.unimodular = is_unimodular(g);
  if (r.solvable) {
    r.nilradical = nilradical(g);
    const LieAlgebra n = subalgebra(g, r.nilradical->basis());
    r.heisenberg_profile = heisenberg_profile(n);
  }
  return r;
}

}  // namespace vaisman::liealg
