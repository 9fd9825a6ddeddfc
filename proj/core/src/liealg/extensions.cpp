#include "vaisman/liealg/extensions.hpp"

#include "vaisman/liealg/structure.hpp"

#include <stdexcept>

namespace vaisman::liealg {

LieAlgebra central_extension(const LieAlgebra& h, const KForm& beta, const std::string& xi_label) {
  if (beta.degree() != 2 || beta.dim() != h.dim()) throw std::invalid_argument("beta must be a 2-form on h");
  if (h.dim() >= 3 && !ce_differential(h, beta).is_zero()) throw std::invalid_argument("beta is not closed");
  const std::size_t n = h.dim();
  std::vector<std::string> labels = h.labels();
  labels.push_back(xi_label);
  LieAlgebra out(n + 1, labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = h.bracket_basis(i, j);
      v.push_back(beta.on_basis({i, j}));
      out.set_bracket(i, j, v);
    }
  return out;
}

LieAlgebra semidirect_product(const LieAlgebra& h, const Matrix& d, const std::string& a_label) {
  const auto check = check_derivation(h, d);
  if (!check.ok) throw std::invalid_argument("not a derivation: " + check.violation);
  const std::size_t n = h.dim();
  std::vector<std::string> labels{a_label};
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  LieAlgebra out(n + 1, labels);
  for (std::size_t j = 0; j < n; ++j) {
    Vector v{Rational(0)};
    const Vector dj = d.column(j);
    v.insert(v.end(), dj.begin(), dj.end());
    out.set_bracket(0, j + 1, v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v{Rational(0)};
      const Vector b = h.bracket_basis(i, j);
      v.insert(v.end(), b.begin(), b.end());
      out.set_bracket(i + 1, j + 1, v);
    }
  return out;
}

DoubleExtension double_extension(const LieAlgebra& h, const KForm& beta, const Matrix& d) {
  const LieAlgebra ext = central_extension(h, beta);
  DoubleExtension out;
  out.algebra = semidirect_product(ext, d);
  out.unimodular = is_unimodular(out.algebra);
  const bool predicted = is_unimodular(h) && d.trace() == 0;
  if (predicted != out.unimodular) throw std::logic_error("double extension violates the unimodularity criterion");
  return out;
}

}  // namespace vaisman::liealg
