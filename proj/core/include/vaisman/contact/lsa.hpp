#pragma once

#include "vaisman/liealg/kform.hpp"
#include "vaisman/liealg/lie_algebra.hpp"
#include "vaisman/metricgeo/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vaisman::contact {

/// Bilinear product on a Lie algebra: e_i . e_j = sum_k p(i, j, k) e_k.
class LsaProduct {
 public:
  LsaProduct() = default;
  explicit LsaProduct(liealg::LieAlgebra g);

  const liealg::LieAlgebra& algebra() const { return g_; }
  std::size_t dim() const { return g_.dim(); }
  const exact::Rational& p(std::size_t i, std::size_t j, std::size_t k) const { return p_[(i * dim() + j) * dim() + k]; }
  void set(std::size_t i, std::size_t j, const exact::Vector& v);

  exact::Vector product(const exact::Vector& x, const exact::Vector& y) const;
  /// rho(x) y = y . x.
  exact::Matrix right(const exact::Vector& x) const;

 private:
  liealg::LieAlgebra g_;
  std::vector<exact::Rational> p_;
};

struct LsaCheck {
  bool torsion = true;        // x.y - y.x = [x,y]
  bool left_symmetric = true; // associator symmetric in the first two slots
  std::string violation;
};
LsaCheck check_lsa(const LsaProduct& p);

/// (a xi + x).(b xi + y) = 1/2 beta(x,y) xi + nabla_x y on h_beta(xi), xi last.
/// Requires (h, m) flat and nabla beta = 0 (std::invalid_argument otherwise).
/// Both identities are asserted (std::logic_error).
LsaProduct lsa_from_central_extension(const liealg::LieAlgebra& h, const metricgeo::Metric& m, const liealg::KForm& beta,
                                      const std::string& xi_label = "xi");

struct LsaCompleteness {
  /// No x with det(I + rho(x)) = 0 among basis vectors, pairwise sums and samples.
  bool no_witness = true;
  std::optional<exact::Vector> witness;
  /// rho(x) nilpotent for every tested x.
  bool nilpotent_certificate = true;
  /// For dim <= 6: det(I + rho(x)) == 1 as a polynomial in the coordinates of x.
  std::optional<bool> symbolic_unit_determinant;
  std::size_t tested = 0;
};

LsaCompleteness lsa_completeness(const LsaProduct& p, std::size_t samples, unsigned long long seed = 1);

}  // namespace vaisman::contact
