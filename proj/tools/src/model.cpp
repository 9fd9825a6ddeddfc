#include "model.hpp"

#include <fstream>
#include <sstream>

namespace vaisman::cli {

bool AlgebraFile::operator==(const AlgebraFile& o) const {
  return g == o.g && g.labels() == o.g.labels() && metric == o.metric && J == o.J && D == o.D && phi == o.phi &&
         xi == o.xi && eta == o.eta && beta == o.beta && product == o.product;
}

json to_json(const Rational& r) { return exact::to_string(r); }

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return exact::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a rational as a string or integer, got " + j.dump());
}

Vector vector_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError("expected a vector of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw InputError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r], cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

namespace {

std::vector<std::tuple<std::size_t, std::size_t, Vector>> triples(const json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned())
      throw InputError(std::string(what) + " entries are [i, j, [coefficients]]");
    const auto i = t[0].get<std::size_t>(), k = t[1].get<std::size_t>();
    if (i >= n || k >= n) throw InputError(std::string(what) + " index out of range");
    out.emplace_back(i, k, vector_from_json(t[2], n));
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra(const json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw InputError("missing or invalid \"dim\"");
  const auto n = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != n) throw InputError("\"basis\" must list dim labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string()) throw InputError("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  AlgebraFile f;
  f.g = LieAlgebra(n, labels);
  if (j.contains("brackets"))
    for (const auto& [a, b, v] : triples(j["brackets"], n, "brackets")) {
      if (a == b) throw InputError("bracket of a basis vector with itself");
      try {
        f.g.set_bracket(a, b, v);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
  auto mat = [&](const char* key, std::optional<Matrix>& out) {
    if (j.contains(key)) out = matrix_from_json(j[key], n, n);
  };
  mat("metric", f.metric);
  mat("J", f.J);
  mat("phi", f.phi);
  mat("beta", f.beta);
  mat("D", f.D);
  if (j.contains("xi")) f.xi = vector_from_json(j["xi"], n);
  if (j.contains("eta")) f.eta = vector_from_json(j["eta"], n);
  if (f.beta && !(f.beta->transpose() == -*f.beta)) throw InputError("\"beta\" must be antisymmetric");
  if (j.contains("product")) {
    std::vector<Rational> p(n * n * n, Rational(0));
    for (const auto& [a, b, v] : triples(j["product"], n, "product"))
      for (std::size_t k = 0; k < n; ++k) p[(a * n + b) * n + k] = v[k];
    f.product = p;
  }
  return f;
}

AlgebraFile read_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return parse_algebra(j);
}

json to_json(const AlgebraFile& f) {
  const std::size_t n = f.g.dim();
  json j;
  j["dim"] = n;
  j["basis"] = f.g.labels();
  json br = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector v = f.g.bracket_basis(a, b);
      if (!exact::is_zero(v)) br.push_back({a, b, to_json(v)});
    }
  j["brackets"] = br;
  if (f.metric) j["metric"] = to_json(*f.metric);
  if (f.J) j["J"] = to_json(*f.J);
  if (f.D) j["D"] = to_json(*f.D);
  if (f.phi) j["phi"] = to_json(*f.phi);
  if (f.xi) j["xi"] = to_json(*f.xi);
  if (f.eta) j["eta"] = to_json(*f.eta);
  if (f.beta) j["beta"] = to_json(*f.beta);
  if (f.product) {
    json p = json::array();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vector v(f.product->begin() + static_cast<long>((a * n + b) * n),
                 f.product->begin() + static_cast<long>((a * n + b + 1) * n));
        if (!exact::is_zero(v)) p.push_back({a, b, to_json(v)});
      }
    j["product"] = p;
  }
  return j;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& parts) {
  std::vector<Rational> out;
  for (const auto& s : parts) {
    try {
      out.push_back(exact::parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

}  // namespace vaisman::cli
