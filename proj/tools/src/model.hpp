#pragma once

#include "vaisman/liealg/kform.hpp"
#include "vaisman/liealg/lie_algebra.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vaisman::cli {

using exact::Matrix;
using exact::Rational;
using exact::Vector;
using liealg::LieAlgebra;
using nlohmann::json;

/// Malformed or inconsistent input; maps to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Everything an input file may carry. Rationals are strings ("p/q") in JSON;
/// plain integers are accepted on input.
struct AlgebraFile {
  LieAlgebra g;
  std::optional<Matrix> metric;
  std::optional<Matrix> J;
  std::optional<Matrix> D;
  std::optional<Matrix> phi;
  std::optional<Vector> xi;
  std::optional<Vector> eta;
  /// Antisymmetric matrix of a 2-form.
  std::optional<Matrix> beta;
  /// e_i . e_j as [i, j, coefficients] triples.
  std::optional<std::vector<Rational>> product;

  bool operator==(const AlgebraFile& o) const;
};

AlgebraFile parse_algebra(const json& j);
AlgebraFile read_algebra(const std::string& path);
json to_json(const AlgebraFile& f);

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const Matrix& m);
Rational rational_from_json(const json& j);
Vector vector_from_json(const json& j, std::size_t n);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// "1,1/2,3" style lists.
std::vector<Rational> parse_rational_list(const std::vector<std::string>& parts);

}  // namespace vaisman::cli
