#pragma once

#include "vaisman/exact/matrix.hpp"
#include "vaisman/exact/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vaisman::exact {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The monomial c * x^k.
  static Polynomial monomial(const Rational& c, std::size_t k);
  /// (x - root).
  static Polynomial linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Matrix operator()(const Matrix& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  bool operator==(const Polynomial& o) const = default;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// p(-x).
  Polynomial reflect() const;
  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Multiplicity of 0 as a root (0 for the zero polynomial).
  std::size_t zero_multiplicity() const;
  /// Divides out x^k.
  Polynomial shift_down(std::size_t k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

/// det(x I - m). Throws std::invalid_argument for non-square input.
Polynomial char_poly(const Matrix& m);

/// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of p in the half-open interval (a, b],
/// with a = -infinity when `a` is empty.
std::size_t count_real_roots(const Polynomial& p, const std::optional<Rational>& a, const Rational& b);

/// True iff every complex root of p is real and <= 0.
/// Throws std::invalid_argument for the zero polynomial.
bool all_roots_real_nonpositive(const Polynomial& p);

}  // namespace vaisman::exact
