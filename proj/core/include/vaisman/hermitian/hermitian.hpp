#pragma once

#include "vaisman/certificate.hpp"
#include "vaisman/liealg/kform.hpp"
#include "vaisman/liealg/lie_algebra.hpp"
#include "vaisman/metricgeo/flat.hpp"
#include "vaisman/metricgeo/metric.hpp"

#include <optional>
#include <string>

namespace vaisman::hermitian {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using exact::operator+;
using exact::operator-;
using exact::operator*;
using liealg::KForm;
using liealg::LieAlgebra;
using metricgeo::Metric;

/// N_J(x,y) = [Jx,Jy] - [x,y] - J([Jx,y] + [x,Jy]).
Vector nijenhuis(const LieAlgebra& g, const Matrix& j, const Vector& x, const Vector& y);
bool is_integrable(const LieAlgebra& g, const Matrix& j);

/// omega(x,y) = <Jx, y>.
KForm fundamental_form(const Metric& m, const Matrix& j);

struct HermitianData {
  LieAlgebra g;
  Metric m;
  Matrix J;
  KForm omega;
};

/// Checks J^2 = -I and J^T G J = G (std::invalid_argument otherwise) and
/// fills omega. Integrability is reported by lck_verdict, not enforced here.
HermitianData make_hermitian(LieAlgebra g, Metric m, Matrix j);

/// theta(x) = -(delta omega)(J x) / (n - 1) for dim = 2n >= 4.
KForm lee_form(const HermitianData& h);

struct LckVerdict {
  bool is_hermitian = false;
  bool is_kahler = false;
  bool is_lck = false;
  bool is_vaisman = false;
  KForm theta;
  /// Metric dual of theta.
  Vector A;
  /// |A|^2; the metric G -> |A|^2 G keeps theta and makes the dual unit.
  Rational a_norm2;
  Certificate certificate;
};

LckVerdict lck_verdict(const HermitianData& h);

/// Kahler test on a flat algebra, decided by nabla J = J nabla and by the
/// splitting criterion (J-invariance of z + h and k', ad_H J = J ad_H).
/// The two routes must agree (std::logic_error otherwise); throws
/// std::invalid_argument when (g, m) is not flat.
struct KahlerFlatResult {
  bool kahler = false;
  bool route_connection = false;
  bool route_splitting = false;
};
KahlerFlatResult kahler_flat_check(const LieAlgebra& g, const Metric& m, const Matrix& j);

/// Identities every Vaisman structure satisfies: [A,JA] = 0, J ad_A = ad_A J,
/// J ad_JA = ad_JA J, ad_JA skew; for unimodular inputs also JA in g' and the
/// dual formula A = |A|^2/(2(n-1)) sum G^{jk} J[J e_j, e_k].
Certificate vaisman_identities(const HermitianData& h, const LckVerdict& v);

}  // namespace vaisman::hermitian
