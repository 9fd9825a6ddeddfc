#include "vaisman/exact/rational.hpp"

#include <stdexcept>
#include <string>

namespace vaisman::exact {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') throw std::invalid_argument("negative denominator: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer common_denominator(const Vector& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

}  // namespace vaisman::exact
