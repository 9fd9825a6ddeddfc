#pragma once

#include "vaisman/certificate.hpp"
#include "vaisman/hermitian/vaisman.hpp"
#include "vaisman/liealg/kform.hpp"
#include "vaisman/metricgeo/metric.hpp"

namespace vaisman::contact {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using exact::operator+;
using exact::operator-;
using exact::operator*;
using hermitian::HermitianData;
using liealg::KForm;
using liealg::LieAlgebra;
using metricgeo::Metric;

struct AlmostContactStructure {
  LieAlgebra g;
  Metric m;
  Matrix phi;
  Vector xi;
  KForm eta;
  /// Phi(x, y) = <phi x, y>.
  KForm Phi;
};

/// Checks odd dimension, eta(xi) = 1, phi^2 = -I + eta (x) xi and
/// <phi x, phi y> = <x, y> - eta(x) eta(y); std::invalid_argument otherwise.
AlmostContactStructure make_almost_contact(LieAlgebra g, Metric m, Matrix phi, Vector xi, KForm eta);

/// N_phi(x,y) = [phi x, phi y] + phi^2 [x,y] - phi([phi x, y] + [x, phi y]).
Vector nijenhuis(const LieAlgebra& g, const Matrix& phi, const Vector& x, const Vector& y);

/// <.,.>' = 1/4 <.,.>, phi' = phi, eta' = -eta/2, xi' = -2 xi.
AlmostContactStructure rescale_to_standard(const AlmostContactStructure& a);

struct ContactVerdict {
  bool is_normal = false;
  /// Normal and d eta(x, y) = -<phi x, y>.
  bool is_sasakian_minus = false;
  /// Normal and d eta' = 2 Phi' after rescale_to_standard.
  bool is_sasakian_standard = false;
  bool is_almost_cokahler = false;
  bool is_cokahler = false;
  /// nabla phi = phi nabla in every basis direction.
  bool phi_parallel = false;
  Certificate certificate;
};

ContactVerdict contact_verdict(const AlmostContactStructure& a);

/// The structure of ker theta on a Vaisman algebra: xi = JA, eta = -theta o J,
/// phi(a xi + x) = J x for x in W, metric rescaled so |A| = 1. The subalgebra
/// is expressed in the basis (JA, W...).
AlmostContactStructure kernel_structure(const HermitianData& h);

struct SasakianReduction {
  HermitianData kahler;
  /// Columns: the basis of ker eta used for the Kahler algebra.
  Matrix basis;
  /// Set when the input is unimodular and solvable (flatness then asserted).
  bool flat_checked = false;
};

/// Kahler algebra on ker eta with the projected bracket. Requires a Sasakian
/// verdict in either convention and center = span{xi}; std::invalid_argument
/// otherwise. Kahler (and, for unimodular solvable input, flat) asserted.
SasakianReduction sasakian_kernel_reduction(const AlmostContactStructure& a);

struct CoKahlerReduction {
  /// d = R A x_{D'} k in the basis (A, k...), phi(aA + x) = Jx, xi = A, eta = theta|d.
  AlmostContactStructure d;
  /// Central extension of d by Phi, basis (A, k..., JA).
  LieAlgebra extension;
  /// Basis change from the canonical (A, B, k...) basis of the reduced input.
  hermitian::VaismanReduction reduction;
};

/// Requires a Vaisman, unimodular, solvable input. Asserts the coKahler
/// verdict, flatness of d, and that the central extension reproduces the
/// input in the canonical basis (std::logic_error otherwise).
CoKahlerReduction vaisman_to_cokahler(const HermitianData& h);

}  // namespace vaisman::contact
