#include "vaisman/hermitian/examples.hpp"

#include <stdexcept>
#include <string>

namespace vaisman::hermitian {

namespace {

void rotate(Matrix& m, std::size_t i, const Rational& a) {
  m(i + 1, i) = a;
  m(i, i + 1) = -a;
}

}  // namespace

HermitianData heisenberg_example(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::size_t dim = 2 * n + 2;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  labels.push_back("w");
  LieAlgebra g(dim, labels);
  const std::size_t z = 2 * n, w = 2 * n + 1;
  for (std::size_t i = 0; i < n; ++i) g.set_bracket(i, n + i, exact::unit_vector(dim, z));
  Matrix j = Matrix::zero(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    j(n + i, i) = 1;
    j(i, n + i) = -1;
  }
  j(w, z) = -1;
  j(z, w) = 1;
  return make_hermitian(std::move(g), Metric::identity(dim), std::move(j));
}

KahlerFlatPackage abelian_package(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("f" + std::to_string(i));
  }
  Matrix j = Matrix::zero(2 * n, 2 * n), d = Matrix::zero(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rotate(j, 2 * i, 1);
    rotate(d, 2 * i, a[i]);
  }
  return {LieAlgebra(2 * n, labels), Metric::identity(2 * n), j, d};
}

KahlerFlatPackage one_h_package(std::size_t l, const std::vector<Rational>& a, const std::vector<Rational>& alpha) {
  const std::size_t m = a.size();
  if (alpha.size() != l + m) throw std::invalid_argument("alpha must have l + m entries");
  for (const auto& x : a)
    if (x == 0) throw std::invalid_argument("the H-action parameters must be nonzero");
  const std::size_t dim = 2 + 2 * (l + m);
  std::vector<std::string> labels{"H", "Z"};
  for (std::size_t i = 1; i <= l; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("f" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    labels.push_back("u" + std::to_string(i));
    labels.push_back("v" + std::to_string(i));
  }
  LieAlgebra k(dim, labels);
  Matrix j = Matrix::zero(dim, dim), d = Matrix::zero(dim, dim);
  rotate(j, 0, 1);
  for (std::size_t i = 0; i < l + m; ++i) {
    const std::size_t p = 2 + 2 * i;
    rotate(j, p, 1);
    rotate(d, p, alpha[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t p = 2 + 2 * (l + i);
    k.set_bracket(0, p, a[i] * exact::unit_vector(dim, p + 1));
    k.set_bracket(0, p + 1, -a[i] * exact::unit_vector(dim, p));
  }
  return {std::move(k), Metric::identity(dim), j, d};
}

}  // namespace vaisman::hermitian
