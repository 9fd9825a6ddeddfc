#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/exact/polynomial.hpp"
#include "vaisman/liealg/lie_algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using vaisman::exact::Matrix;
using vaisman::exact::Rational;
using vaisman::exact::Vector;
using vaisman::liealg::LieAlgebra;

Rational q(long p, long d = 1);
Vector vec(std::initializer_list<long> v);
Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4);
Vector random_vector(std::mt19937_64& rng, std::size_t n, int num_bound = 9, int den_bound = 4);
Matrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound);

/// Lie algebra spanned by a set of matrices under the commutator, in the
/// basis found by closure. Used to produce random solvable algebras from
/// upper-triangular generators.
LieAlgebra matrix_lie_closure(const std::vector<Matrix>& gens, std::size_t max_dim);
LieAlgebra random_solvable_algebra(std::mt19937_64& rng, std::size_t max_dim);

/// Brute-force oracles, independent of the library algorithms under test.
Rational det_by_permutations(const Matrix& m);
std::size_t rank_by_minors(const Matrix& m);
Vector poly_coeffs_by_interpolation(const Matrix& m);
bool ad_nilpotent(const LieAlgebra& g, const Vector& x);

/// Fixed algebras.
LieAlgebra heisenberg(std::size_t n);      // x_1..x_n, y_1..y_n, z
LieAlgebra r_times_heisenberg(std::size_t n);  // x.., y.., z, w
LieAlgebra aff_r();
LieAlgebra e2_type();  // H, e, f with [H,e]=f, [H,f]=-e

}  // namespace testsupport
