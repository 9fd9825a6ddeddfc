#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/liealg/kform.hpp"
#include "vaisman/liealg/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vaisman::metricgeo {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using exact::operator+;
using exact::operator-;
using exact::operator*;
using liealg::KForm;
using liealg::LieAlgebra;

/// Positive-definite symmetric Gram matrix. Construction throws
/// std::invalid_argument on asymmetric, degenerate or indefinite input.
class Metric {
 public:
  Metric() = default;
  explicit Metric(Matrix gram);
  static Metric identity(std::size_t n);

  const Matrix& gram() const { return g_; }
  const Matrix& inverse() const { return ginv_; }
  std::size_t dim() const { return g_.rows(); }

  Rational inner(const Vector& x, const Vector& y) const;
  Rational norm2(const Vector& x) const { return inner(x, x); }
  /// The 1-form <v, .>.
  KForm flat(const Vector& v) const;
  /// The metric dual of a 1-form.
  Vector sharp(const KForm& alpha) const;
  bool is_skew(const Matrix& t) const;
  bool is_orthogonal(const Matrix& t) const;
  Metric scaled(const Rational& s) const;
  bool operator==(const Metric& o) const { return g_ == o.g_; }

 private:
  Matrix g_;
  Matrix ginv_;
};

/// True iff every leading principal minor is positive.
bool is_positive_definite(const Matrix& g);

/// nabla[i] is the matrix of nabla_{e_i}: column j holds nabla_{e_i} e_j.
struct Connection {
  std::vector<Matrix> nabla;
  Matrix along(const Vector& x) const;
};

/// Koszul formula <nabla_x y, z> = 1/2(<[x,y],z> - <[y,z],x> + <[z,x],y>),
/// solved with G^{-1}. Torsion-freeness and metric compatibility are asserted.
Connection levi_civita(const LieAlgebra& g, const Metric& m);

/// R(x,y) = nabla_[x,y] - [nabla_x, nabla_y].
Matrix curvature(const LieAlgebra& g, const Connection& c, const Vector& x, const Vector& y);

struct FlatnessWitness {
  std::size_t i = 0, j = 0, k = 0;
  Vector value;  // R(e_i, e_j) e_k
};

struct FlatnessResult {
  bool flat = true;
  std::optional<FlatnessWitness> witness;
};

FlatnessResult is_flat(const LieAlgebra& g, const Metric& m);

/// (nabla_{e_i} alpha)(y_1..y_k) = -sum_p alpha(.., nabla_{e_i} y_p, ..).
KForm covariant_derivative(const Connection& c, std::size_t i, const KForm& alpha);

/// (delta alpha)(..) = -sum_{j,k} G^{jk} (nabla_{e_j} alpha)(e_k, ..).
KForm codifferential(const LieAlgebra& g, const Metric& m, const KForm& alpha);

}  // namespace vaisman::metricgeo
