#pragma once

#include "vaisman/liealg/kform.hpp"
#include "vaisman/liealg/lie_algebra.hpp"

#include <string>

namespace vaisman::liealg {

/// h_beta(xi): basis of h followed by the central vector xi, with
/// [x,y] = beta(x,y) xi + [x,y]_h. Throws std::invalid_argument if d beta != 0.
LieAlgebra central_extension(const LieAlgebra& h, const KForm& beta, const std::string& xi_label = "xi");

/// R A semidirect h with ad_A = d. Basis (A, h...). Throws if d is not a derivation.
LieAlgebra semidirect_product(const LieAlgebra& h, const Matrix& d, const std::string& a_label = "A");

struct DoubleExtension {
  LieAlgebra algebra;
  bool unimodular = false;
};

/// h(D, beta) = R A semidirect_D h_beta(xi), basis (A, h..., xi).
/// d acts on h_beta(xi). Asserted: the result is
/// unimodular iff h is unimodular and tr D = 0 (std::logic_error otherwise).
DoubleExtension double_extension(const LieAlgebra& h, const KForm& beta, const Matrix& d);

}  // namespace vaisman::liealg
