#pragma once

#include "vaisman/hermitian/vaisman.hpp"

#include <vector>

namespace vaisman::hermitian {

/// R x h_{2n+1} in the basis (x_1..x_n, y_1..y_n, z, w), [x_i, y_i] = z,
/// orthonormal, J x_i = y_i, J z = -w.
HermitianData heisenberg_example(std::size_t n);

/// Abelian R^{2n}, basis (e_1, f_1, ..., e_n, f_n), orthonormal, J e_i = f_i,
/// D e_i = a_i f_i.
KahlerFlatPackage abelian_package(const std::vector<Rational>& a);

/// Kahler flat algebra with dim h = 1: basis (H, Z, e_1, f_1, .., e_l, f_l,
/// u_1, v_1, .., u_m, v_m), orthonormal, JH = Z, Je_i = f_i, Ju_j = v_j,
/// [H, u_j] = a_j v_j, [H, v_j] = -a_j u_j. D rotates the (e_i, f_i) and
/// then the (u_j, v_j) planes by alpha (l + m entries), and kills H, Z.
/// The a_j must be nonzero (std::invalid_argument otherwise).
KahlerFlatPackage one_h_package(std::size_t l, const std::vector<Rational>& a, const std::vector<Rational>& alpha);

}  // namespace vaisman::hermitian
