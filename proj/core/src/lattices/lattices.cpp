#include "vaisman/lattices/lattices.hpp"

#include "vaisman/hermitian/examples.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vaisman::lattices {

namespace {

// (cos, sin) of q quarter turns.
std::pair<int, int> quarter(const Integer& q) {
  Integer r = q % 4;
  if (r < 0) r += 4;
  switch (r.get_si()) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Rotation by q quarter turns on generator coordinates (x, x + 1).
void place_rotation(IntMatrix& m, std::size_t x, const Integer& q) {
  const auto [c, s] = quarter(q);
  m(x, x) = c;
  m(x + 1, x) = s;
  m(x, x + 1) = -s;
  m(x + 1, x + 1) = c;
}

void add_heisenberg(LatticePresentation& lp, std::size_t z, std::size_t n, const Integer& k) {
  for (std::size_t i = 0; i < n; ++i) lp.pairings.push_back({z + 1 + 2 * i, z + 2 + 2 * i, z, 2 * k});
}

void push_pair_labels(std::vector<std::string>& g, const std::string& x, const std::string& y, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    g.push_back(x + std::to_string(i));
    g.push_back(y + std::to_string(i));
  }
}

std::string power(const std::string& base, std::size_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

OscillatorParams normalize(const std::vector<Rational>& a) {
  if (a.empty() || std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; }))
    throw std::invalid_argument("oscillator parameters must not all vanish");
  const Integer den = exact::common_denominator(a);
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& x : a) {
    Rational s = x * Rational(den);
    v.push_back(s.get_num());
    g = exact::gcd(g, v.back());
  }
  for (auto& x : v) x /= g;
  std::vector<Integer> neg;
  for (const auto& x : v) neg.push_back(-x);
  std::sort(v.begin(), v.end());
  std::sort(neg.begin(), neg.end());
  return {std::max(v, neg), a};
}

hermitian::HermitianData oscillator_algebra(const OscillatorParams& p) {
  if (p.a.empty() || std::all_of(p.a.begin(), p.a.end(), [](const Integer& x) { return x == 0; }))
    throw std::invalid_argument("oscillator parameters must not all vanish");
  std::vector<Rational> a;
  for (const auto& x : p.a) a.emplace_back(x);
  return hermitian::construct_vaisman(hermitian::abelian_package(a));
}

bool oscillator_isomorphic(const OscillatorParams& p, const OscillatorParams& q) {
  std::vector<Rational> pa(p.a.begin(), p.a.end()), qa(q.a.begin(), q.a.end());
  return normalize(pa).a == normalize(qa).a;
}

IntMatrix rotation_matrix(const std::vector<Integer>& a, QuarterTurn t) {
  IntMatrix m = IntMatrix::identity(2 * a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) place_rotation(m, 1 + 2 * i, a[i] * t.m);
  return m;
}

LatticePresentation heisenberg_lattice(std::size_t n, const Integer& k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  LatticePresentation lp;
  lp.generators.push_back("z");
  push_pair_labels(lp.generators, "x", "y", n);
  add_heisenberg(lp, 0, n, k);
  return lp;
}

LatticePresentation lattice_presentation_oscillator(const std::vector<Integer>& a, const Integer& k, QuarterTurn t) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (a.empty() || std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
    throw std::invalid_argument("oscillator parameters must not all vanish");
  const std::size_t n = a.size();
  LatticePresentation lp;
  lp.generators.push_back("t");
  lp.generators.push_back("z");
  push_pair_labels(lp.generators, "x", "y", n);
  add_heisenberg(lp, 1, n, k);
  IntMatrix act = IntMatrix::identity(2 * n + 2);
  const IntMatrix rot = rotation_matrix(a, t);
  for (std::size_t r = 0; r < rot.rows(); ++r)
    for (std::size_t c = 0; c < rot.cols(); ++c) act(r + 1, c + 1) = rot(r, c);
  lp.levels.push_back({0, act});
  return lp;
}

LatticePresentation lattice_presentation_tower(std::size_t l, std::size_t m, const std::vector<Integer>& a,
                                               const std::vector<Integer>& alpha, const Integer& k, QuarterTurn j,
                                               QuarterTurn i) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (a.size() != m || alpha.size() != l + m) throw std::invalid_argument("need m rotation speeds and l + m angles");
  if (std::any_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
    throw std::invalid_argument("the k' rotation speeds must be nonzero");
  const std::size_t n = l + m;
  const std::size_t N = 2 * n + 4;
  LatticePresentation lp;
  lp.generators = {"r", "s", "Zg", "z"};
  push_pair_labels(lp.generators, "e", "f", l);
  push_pair_labels(lp.generators, "u", "v", m);
  add_heisenberg(lp, 3, n, k);

  // psi(j): the unit of j^{-1} Z picks up j * (1/j) B = z^{2k}.
  IntMatrix psi = IntMatrix::identity(N);
  psi(3, 2) = 2 * k;
  for (std::size_t q = 0; q < m; ++q) place_rotation(psi, 4 + 2 * (l + q), a[q] * j.m);
  IntMatrix phi = IntMatrix::identity(N);
  for (std::size_t q = 0; q < n; ++q) place_rotation(phi, 4 + 2 * q, alpha[q] * i.m);
  lp.levels.push_back({1, psi});
  lp.levels.push_back({0, phi});
  return lp;
}

Certificate validate(const LatticePresentation& lp) {
  Certificate c;
  const std::size_t N = lp.generators.size();
  IntMatrix pair(N, N);
  for (const auto& p : lp.pairings) {
    pair(p.x, p.y) += p.exponent;
    pair(p.y, p.x) -= p.exponent;
  }
  for (const auto& lv : lp.levels) {
    const std::string tag = "level " + lp.generators[lv.generator];
    const Rational det = lv.action.to_rational().determinant();
    c.push_back({tag + " invertible over Z", det == 1 || det == -1, "det = " + exact::to_string(det)});
    bool fixes = true;
    for (std::size_t r = 0; r < N; ++r)
      if (lv.action(r, lv.generator) != (r == lv.generator ? 1 : 0)) fixes = false;
    c.push_back({tag + " fixes its generator", fixes, ""});
    // [g_x, g_y] = z^e must map to [A g_x, A g_y] = (A z)^e, to first order in the abelian shadow.
    bool keeps = true;
    std::string w;
    for (const auto& p : lp.pairings) {
      Integer lhs = 0;
      for (std::size_t u = 0; u < N; ++u)
        for (std::size_t v = 0; v < N; ++v) lhs += lv.action(u, p.x) * pair(u, v) * lv.action(v, p.y);
      bool ok = lhs == p.exponent;
      for (std::size_t r = 0; r < N; ++r)
        if (lv.action(r, p.center) != (r == p.center ? 1 : 0)) ok = false;
      if (!ok && keeps) w = lp.generators[p.x] + ", " + lp.generators[p.y];
      keeps = keeps && ok;
    }
    c.push_back({tag + " preserves the pairing", keeps, w});
  }
  for (std::size_t s = 0; s < lp.levels.size(); ++s)
    for (std::size_t t = s + 1; t < lp.levels.size(); ++t) {
      const auto& a = lp.levels[s].action;
      const auto& b = lp.levels[t].action;
      c.push_back({"levels " + lp.generators[lp.levels[s].generator] + ", " + lp.generators[lp.levels[t].generator] +
                       " commute",
                   a * b == b * a, ""});
    }
  return c;
}

AbelianGroup abelian_group(std::size_t free, const std::vector<Integer>& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  const auto snf = exact::smith_normal_form(d);
  AbelianGroup g;
  g.rank = free + (orders.size() - snf.rank);
  for (const auto& f : snf.factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

IntMatrix relation_matrix(const LatticePresentation& lp) {
  const std::size_t N = lp.generators.size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& p : lp.pairings) {
    std::vector<Integer> r(N, Integer(0));
    r[p.center] = p.exponent;
    rows.push_back(r);
  }
  for (const auto& r : lp.relations) {
    if (r.size() != N) throw std::invalid_argument("relation length does not match the generators");
    rows.push_back(r);
  }
  for (const auto& lv : lp.levels)
    for (std::size_t c = 0; c < N; ++c) {
      std::vector<Integer> r(N, Integer(0));
      bool any = false;
      for (std::size_t u = 0; u < N; ++u) {
        r[u] = lv.action(u, c) - (u == c ? 1 : 0);
        any = any || r[u] != 0;
      }
      if (any) rows.push_back(r);
    }
  IntMatrix m(rows.size(), N);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < N; ++c) m(i, c) = rows[i][c];
  return m;
}

AbelianGroup abelianization(const LatticePresentation& lp) {
  const IntMatrix m = relation_matrix(lp);
  const auto snf = exact::smith_normal_form(m);
  AbelianGroup g;
  g.rank = lp.generators.size() - snf.rank;
  for (const auto& f : snf.factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

std::string to_string(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.rank > 0) parts.push_back(power("Z", g.rank));
  std::size_t i = 0;
  while (i < g.torsion.size()) {
    std::size_t e = i;
    while (e < g.torsion.size() && g.torsion[e] == g.torsion[i]) ++e;
    parts.push_back(power("Z_" + g.torsion[i].get_str(), e - i));
    i = e;
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t p = 1; p < parts.size(); ++p) out += " + " + parts[p];
  return out;
}

AbelianGroup oscillator_h1_closed_form(const std::vector<Integer>& a, const Integer& k, QuarterTurn t) {
  const std::size_t n = a.size();
  auto mod = [](const Integer& x, int q) {
    Integer r = x % q;
    if (r < 0) r += q;
    return r.get_si();
  };
  if (std::all_of(a.begin(), a.end(), [&](const Integer& x) { return mod(x, 2) == 0; }) && t.m != 4)
    throw std::invalid_argument("closed forms need an odd rotation speed");
  std::vector<Integer> orders{2 * k};
  if (t.m == 4) return abelian_group(2 * n + 1, orders);
  if (t.m == 2) {
    const auto p = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](const Integer& x) { return mod(x, 2) == 0; }));
    orders.insert(orders.end(), 2 * (n - p), Integer(2));
    return abelian_group(1 + 2 * p, orders);
  }
  if (t.m == 1) {
    const auto c = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](const Integer& x) { return mod(x, 4) == 0; }));
    const auto d = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](const Integer& x) { return mod(x, 4) == 2; }));
    orders.insert(orders.end(), 2 * d + (n - c - d), Integer(2));
    return abelian_group(1 + 2 * c, orders);
  }
  throw std::invalid_argument("closed forms exist for quarter, half and full turns only");
}

H1Table dim6_table(QuarterTurn t, const std::vector<Integer>& ks) {
  struct Spec {
    std::string residue, expected;
    std::size_t free, twos;
  };
  std::vector<Spec> specs;
  int modulus = 0;
  if (t.m == 2) {
    modulus = 2;
    specs = {{"ab = 1 (mod 2)", "Z + Z_2k + Z_2^4", 1, 4}, {"ab = 0 (mod 2)", "Z^3 + Z_2k + Z_2^2", 3, 2}};
  } else if (t.m == 1) {
    modulus = 4;
    specs = {{"ab = +-1 (mod 4)", "Z + Z_2k + Z_2^2", 1, 2},
             {"ab = 2 (mod 4)", "Z + Z_2k + Z_2^3", 1, 3},
             {"ab = 0 (mod 4)", "Z^3 + Z_2k + Z_2", 3, 1}};
  } else {
    throw std::invalid_argument("dim-6 tables exist for quarter and half turns");
  }
  auto row_of = [&](long a, long b) -> std::size_t {
    const long ab = (a * b) % modulus;
    if (modulus == 2) return ab == 1 ? 0 : 1;
    if (ab == 1 || ab == 3) return 0;
    return ab == 2 ? 1 : 2;
  };

  H1Table table{t, ks, {}};
  for (const auto& s : specs) table.rows.push_back({s.residue, s.expected, s.free, {}, true});
  for (auto& r : table.rows) r.computed.resize(ks.size());
  std::vector<std::vector<bool>> seen(specs.size(), std::vector<bool>(ks.size(), false));

  for (long a = 0; a < modulus; ++a)
    for (long b = 0; b < modulus; ++b) {
      if (a % 2 == 0 && b % 2 == 0) continue;
      const std::size_t r = row_of(a, b);
      for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        const AbelianGroup g = abelianization(lattice_presentation_oscillator({Integer(a), Integer(b)}, ks[ki], t));
        std::vector<Integer> orders{2 * ks[ki]};
        orders.insert(orders.end(), specs[r].twos, Integer(2));
        if (g != abelian_group(specs[r].free, orders)) table.rows[r].matches = false;
        if (seen[r][ki] && g != table.rows[r].computed[ki]) table.rows[r].matches = false;
        table.rows[r].computed[ki] = g;
        seen[r][ki] = true;
      }
    }
  return table;
}

std::string render(const H1Table& t) {
  std::ostringstream os;
  os << "H_1 of Lambda_{k," << (t.turn.m == 2 ? "pi" : "pi/2") << "} \\ G_(a,b)\n";
  std::vector<std::string> head{"a,b", "H_1(M,Z)", "b_1"};
  for (const auto& k : t.ks) head.push_back("k = " + k.get_str());
  head.push_back("match");
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : t.rows) {
    std::vector<std::string> line{r.residue, r.expected, std::to_string(r.b1)};
    for (const auto& g : r.computed) line.push_back(to_string(g));
    line.push_back(r.matches ? "yes" : "NO");
    cells.push_back(line);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : cells) {
    os << "|";
    for (std::size_t c = 0; c < line.size(); ++c) os << " " << line[c] << std::string(width[c] - line[c].size(), ' ') << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace vaisman::lattices
