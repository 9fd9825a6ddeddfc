#include "commands.hpp"

#include "model.hpp"
#include "report.hpp"
#include "vaisman/classify/classify.hpp"
#include "vaisman/contact/contact.hpp"
#include "vaisman/contact/lsa.hpp"
#include "vaisman/hermitian/examples.hpp"
#include "vaisman/lattices/lattices.hpp"
#include "vaisman/liealg/extensions.hpp"
#include "vaisman/liealg/structure.hpp"

#include <filesystem>

namespace vaisman::cli {

using hermitian::HermitianData;
using hermitian::KahlerFlatPackage;
using liealg::KForm;
using metricgeo::Metric;

namespace {

json pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

json flat_witness(const metricgeo::FlatnessResult& f) {
  if (!f.witness) return nullptr;
  return {{"i", f.witness->i}, {"j", f.witness->j}, {"k", f.witness->k}, {"R(e_i,e_j)e_k", to_json(f.witness->value)}};
}

void require_lie(const LieAlgebra& g) {
  const auto v = liealg::validate(g);
  if (!v.ok) throw InputError("not a Lie algebra: " + v.violation);
}

Metric metric_of(const AlgebraFile& f) {
  if (!f.metric) throw InputError("input has no \"metric\"");
  try {
    return Metric(*f.metric);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

HermitianData hermitian_of(const AlgebraFile& f) {
  require_lie(f.g);
  if (!f.J) throw InputError("input has no \"J\"");
  try {
    return hermitian::make_hermitian(f.g, metric_of(f), *f.J);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

contact::AlmostContactStructure contact_of(const AlgebraFile& f) {
  require_lie(f.g);
  if (!f.phi || !f.xi || !f.eta) throw InputError("input needs \"phi\", \"xi\" and \"eta\"");
  try {
    return contact::make_almost_contact(f.g, metric_of(f), *f.phi, *f.xi, KForm::covector(*f.eta));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

KahlerFlatPackage package_of(const AlgebraFile& f) {
  require_lie(f.g);
  if (!f.J || !f.D) throw InputError("a package needs \"metric\", \"J\" and \"D\"");
  return {f.g, metric_of(f), *f.J, *f.D};
}

KForm beta_of(const AlgebraFile& f, const std::string& which) {
  if (which == "omega") {
    if (!f.J) throw InputError("--beta omega needs \"J\"");
    return hermitian::fundamental_form(metric_of(f), *f.J);
  }
  if (which == "file") {
    if (!f.beta) throw InputError("--beta file needs \"beta\"");
    return KForm::from_matrix(*f.beta);
  }
  throw InputError("--beta must be omega or file");
}

AlgebraFile file_of(const HermitianData& h) {
  AlgebraFile f;
  f.g = h.g;
  f.metric = h.m.gram();
  f.J = h.J;
  return f;
}

AlgebraFile file_of(const contact::AlmostContactStructure& a) {
  AlgebraFile f;
  f.g = a.g;
  f.metric = a.m.gram();
  f.phi = a.phi;
  f.xi = a.xi;
  f.eta = a.eta.as_vector();
  return f;
}

AlgebraFile file_of(const KahlerFlatPackage& p) {
  AlgebraFile f;
  f.g = p.k;
  f.metric = p.m.gram();
  f.J = p.J;
  f.D = p.D;
  return f;
}

json lck_json(const hermitian::LckVerdict& v) {
  return {{"is_hermitian", v.is_hermitian}, {"is_kahler", v.is_kahler}, {"is_lck", v.is_lck},
          {"is_vaisman", v.is_vaisman},     {"theta", to_json(v.theta.as_vector())},
          {"A", to_json(v.A)},              {"certificate", to_json(v.certificate)}};
}

json contact_json(const contact::ContactVerdict& v) {
  return {{"is_normal", v.is_normal},
          {"is_sasakian_minus", v.is_sasakian_minus},
          {"is_sasakian_standard", v.is_sasakian_standard},
          {"is_almost_cokahler", v.is_almost_cokahler},
          {"is_cokahler", v.is_cokahler},
          {"phi_parallel", v.phi_parallel},
          {"certificate", to_json(v.certificate)}};
}

std::string write_output(const std::string& path, const AlgebraFile& f) {
  if (path.empty()) throw InputError("missing -o/--out");
  const std::string text = to_json(f).dump(2) + "\n";
  write_atomic(path, text);
  return sha256_hex(text);
}

json group_json(const lattices::AbelianGroup& g) {
  json t = json::array();
  for (const auto& f : g.torsion) t.push_back(f.get_str());
  return {{"rank", g.rank}, {"torsion", t}, {"group", lattices::to_string(g)}};
}

std::vector<exact::Integer> integral(const std::vector<Rational>& v, const char* what) {
  std::vector<exact::Integer> out;
  for (const auto& x : v) {
    if (x.get_den() != 1) throw InputError(std::string(what) + " must be integers");
    out.push_back(x.get_num());
  }
  return out;
}

json invariant_json(const classify::IsoInvariant& inv) {
  json j{{"dim", inv.dim},
         {"nilpotent", inv.nilpotent},
         {"nilradical_dim", inv.nilradical_dim},
         {"nilradical_profile", pair_json(inv.profile)},
         {"center_dim", inv.center_dim}};
  if (inv.speeds) {
    json s = json::array();
    for (const auto& x : *inv.speeds) s.push_back(x.get_str());
    j["oscillator_ratio"] = s;
  } else {
    j["oscillator_ratio"] = nullptr;
  }
  if (inv.spectrum)
    j["spectrum_signature"] = {{"zero", inv.spectrum->zero},
                               {"imaginary_pairs", inv.spectrum->imaginary_pairs},
                               {"other", inv.spectrum->other}};
  else
    j["spectrum_signature"] = nullptr;
  return j;
}

}  // namespace

Outcome run_verify(const GlobalOptions& g, const std::string& path, const std::string& structure) {
  const AlgebraFile f = read_algebra(path);
  Outcome o;
  o.report["input_digest"] = file_digest(path);
  o.report["structure"] = structure;
  o.report["provenance"] = "derived";
  json& r = o.report["result"];
  bool verdict = false;

  if (structure == "lie") {
    const auto v = liealg::validate(f.g);
    verdict = v.ok;
    r["violation"] = v.violation;
    if (v.ok) {
      const auto rep = liealg::analyze(f.g);
      r["solvable"] = rep.solvable;
      r["nilpotent"] = rep.nilpotent;
      r["unimodular"] = rep.unimodular;
      r["center_dim"] = rep.center.dim();
      r["derived_dim"] = rep.derived.dim();
      r["nilradical_dim"] = rep.nilradical ? json(rep.nilradical->dim()) : json(nullptr);
      r["nilradical_profile"] = pair_json(rep.heisenberg_profile);
    }
  } else if (structure == "metric") {
    require_lie(f.g);
    const Metric m = metric_of(f);
    const auto flat = metricgeo::is_flat(f.g, m);
    verdict = flat.flat;
    r["flat"] = flat.flat;
    r["witness"] = flat_witness(flat);
    r["unimodular"] = liealg::is_unimodular(f.g);
  } else if (structure == "hermitian") {
    const auto h = hermitian_of(f);
    verdict = hermitian::is_integrable(h.g, h.J);
    r["integrable"] = verdict;
    r["omega"] = to_json(h.omega.as_matrix());
  } else if (structure == "lck" || structure == "vaisman") {
    const auto h = hermitian_of(f);
    if (h.g.dim() < 4) throw InputError("LCK structures need dimension at least 4");
    const auto v = hermitian::lck_verdict(h);
    r = lck_json(v);
    verdict = structure == "lck" ? v.is_lck : v.is_vaisman;
    if (v.is_vaisman) {
      r["vaisman_identities"] = to_json(hermitian::vaisman_identities(h, v));
      if (liealg::is_unimodular(h.g) && liealg::is_solvable(h.g)) {
        const auto s = hermitian::spectrum_all_imaginary(h.g, g.samples, g.seed);
        r["spectrum"] = {{"pass", s.pass}, {"tested", s.tested},
                         {"witness", s.witness ? to_json(*s.witness) : json(nullptr)}};
      }
    }
  } else if (structure == "kahler-flat") {
    const auto h = hermitian_of(f);
    const auto flat = metricgeo::is_flat(h.g, h.m);
    r["flat"] = flat.flat;
    r["witness"] = flat_witness(flat);
    if (flat.flat) {
      const auto k = hermitian::kahler_flat_check(h.g, h.m, h.J);
      verdict = k.kahler;
      r["kahler"] = k.kahler;
      r["route_connection"] = k.route_connection;
      r["route_splitting"] = k.route_splitting;
      const auto fd = metricgeo::flat_decomposition(h.g, h.m);
      r["decomposition"] = {{"z", fd.z.dim()}, {"h", fd.h.dim()}, {"kprime", fd.kprime.dim()}};
      if (k.kahler && fd.kprime.dim() > 0) {
        try {
          const auto ab = metricgeo::adapted_block_basis(h.g, h.m, fd, {h.J}, g.tolerance, static_cast<unsigned>(g.seed));
          r["adapted_blocks"] = {{"lambdas", ab.lambdas}, {"params", ab.params}, {"residual", ab.residual},
                                 {"tolerance", g.tolerance}};
        } catch (const std::exception& e) {
          r["adapted_blocks"] = {{"error", e.what()}};
        }
      }
    }
  } else if (structure == "sasakian" || structure == "cokahler") {
    const auto a = contact_of(f);
    const auto v = contact::contact_verdict(a);
    r = contact_json(v);
    verdict = structure == "sasakian" ? (v.is_sasakian_minus || v.is_sasakian_standard) : v.is_cokahler;
  } else if (structure == "lsa") {
    require_lie(f.g);
    if (!f.product) throw InputError("input has no \"product\"");
    contact::LsaProduct p(f.g);
    const std::size_t n = f.g.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p.set(i, j, Vector(f.product->begin() + static_cast<long>((i * n + j) * n),
                           f.product->begin() + static_cast<long>((i * n + j + 1) * n)));
    const auto c = contact::check_lsa(p);
    verdict = c.torsion && c.left_symmetric;
    r["torsion_free"] = c.torsion;
    r["left_symmetric"] = c.left_symmetric;
    r["violation"] = c.violation;
    const auto comp = contact::lsa_completeness(p, g.samples, g.seed);
    r["completeness"] = {{"no_witness", comp.no_witness},
                         {"witness", comp.witness ? to_json(*comp.witness) : json(nullptr)},
                         {"nilpotent_certificate", comp.nilpotent_certificate},
                         {"symbolic_unit_determinant",
                          comp.symbolic_unit_determinant ? json(*comp.symbolic_unit_determinant) : json(nullptr)},
                         {"tested", comp.tested}};
  } else {
    throw InputError("unknown structure '" + structure + "'");
  }
  o.report["verdict"] = verdict;
  o.exit_code = verdict ? 0 : 1;
  return o;
}

Outcome run_construct(const GlobalOptions& g, const ConstructOptions& c) {
  Outcome o;
  json& r = o.report["result"];
  o.report["kind"] = c.kind;
  o.report["provenance"] = "derived";
  AlgebraFile out;
  auto input = [&]() {
    if (c.from.empty()) throw InputError("construct " + c.kind + " needs --from");
    o.report["input_digest"] = file_digest(c.from);
    return read_algebra(c.from);
  };
  auto params_digest = [&]() { o.report["input_digest"] = sha256_hex(g.command_line); };

  if (c.kind == "central-ext") {
    const auto f = input();
    require_lie(f.g);
    out.g = liealg::central_extension(f.g, beta_of(f, c.beta), "xi");
  } else if (c.kind == "double-ext") {
    const auto p = package_of(input());
    const std::size_t n = p.k.dim();
    Matrix d = Matrix::zero(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = p.D(i, j);
    const auto de = liealg::double_extension(p.k, hermitian::fundamental_form(p.m, p.J), d);
    out.g = de.algebra;
    r["unimodular"] = de.unimodular;
  } else if (c.kind == "vaisman") {
    const auto p = package_of(input());
    const auto cert = hermitian::check_package(p);
    r["package"] = to_json(cert);
    if (!all_pass(cert)) throw InputError("not a Kahler flat package with a compatible derivation");
    out = file_of(hermitian::construct_vaisman(p));
  } else if (c.kind == "cokahler") {
    const auto h = hermitian_of(input());
    const auto red = contact::vaisman_to_cokahler(h);
    r["extension_reproduces_input"] = true;
    r["basis_change"] = to_json(red.reduction.basis_change);
    out = file_of(red.d);
  } else if (c.kind == "lsa") {
    const auto f = input();
    require_lie(f.g);
    const auto p = contact::lsa_from_central_extension(f.g, metric_of(f), beta_of(f, c.beta));
    out.g = p.algebra();
    const std::size_t n = out.g.dim();
    std::vector<Rational> prod;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) prod.push_back(p.p(i, j, k));
    out.product = prod;
  } else if (c.kind == "oscillator") {
    params_digest();
    const auto p = lattices::normalize(parse_rational_list(c.a));
    json orig = json::array(), norm = json::array();
    for (const auto& x : p.original) orig.push_back(to_json(x));
    for (const auto& x : p.a) norm.push_back(x.get_str());
    r["a_original"] = orig;
    r["a_normalized"] = norm;
    out = file_of(lattices::oscillator_algebra(p));
  } else if (c.kind == "tower") {
    params_digest();
    out = file_of(hermitian::construct_vaisman(
        hermitian::one_h_package(c.l, parse_rational_list(c.a), parse_rational_list(c.alpha))));
  } else if (c.kind == "family") {
    params_digest();
    const auto m = classify::build_family(classify::parse_family(c.name));
    r["family"] = classify::name(m.tag);
    o.report["provenance"] = "paper table";
    out = file_of(m.structure);
  } else {
    throw InputError("unknown construction '" + c.kind + "'");
  }
  r["dim"] = out.g.dim();
  r["output"] = c.out;
  r["output_digest"] = write_output(c.out, out);
  o.report["verdict"] = true;
  return o;
}

Outcome run_reduce(const GlobalOptions&, const std::string& from, const std::string& out) {
  Outcome o;
  o.report["input_digest"] = file_digest(from);
  o.report["provenance"] = "derived";
  const auto h = hermitian_of(read_algebra(from));
  const auto red = hermitian::reduce_vaisman(h);
  json& r = o.report["result"];
  r["scale"] = to_json(red.scale);
  r["A"] = to_json(red.A);
  r["JA"] = to_json(red.JA);
  r["basis_change"] = to_json(red.basis_change);
  r["package"] = to_json(hermitian::check_package(red.package));
  r["output"] = out;
  r["output_digest"] = write_output(out, file_of(red.package));
  o.report["verdict"] = true;
  return o;
}

Outcome run_classify(const GlobalOptions&, const std::string& path, std::size_t dim) {
  Outcome o;
  o.report["input_digest"] = file_digest(path);
  o.report["provenance"] = "paper table";
  const auto f = read_algebra(path);
  require_lie(f.g);
  if (f.g.dim() != dim) throw InputError("--dim does not match the input dimension");
  if (dim != 4 && dim != 6) throw InputError("the catalogue covers dimensions 4 and 6");
  const auto c = classify::classify(f.g);
  json& r = o.report["result"];
  r["invariant"] = invariant_json(c.invariant);
  r["unimodular"] = c.unimodular;
  r["solvable"] = c.solvable;
  json m = json::array();
  for (const auto& t : c.matches) m.push_back(classify::name(t));
  r["matches"] = m;
  r["family"] = c.matches.empty() ? "outside catalogue" : classify::name(c.matches.front());
  if (c.matches.size() > 1) {
    json w = json::array();
    for (std::size_t i = 0; i + 1 < c.matches.size(); ++i)
      if (const auto p = classify::explicit_isomorphism(c.matches[i], c.matches[i + 1]))
        w.push_back({{"from", classify::name(c.matches[i])}, {"to", classify::name(c.matches[i + 1])}, {"basis", to_json(*p)}});
    r["isomorphisms"] = w;
  }
  o.report["verdict"] = !c.matches.empty();
  o.exit_code = c.matches.empty() ? 1 : 0;
  return o;
}

Outcome run_lattice_h1(const GlobalOptions& g, const LatticeOptions& l) {
  Outcome o;
  o.report["input_digest"] = sha256_hex(g.command_line);
  json& r = o.report["result"];
  if (l.k < 1) throw InputError("-k must be positive");
  lattices::LatticePresentation lp;
  if (l.family == "oscillator") {
    if (l.a.empty()) throw InputError("-a is required");
    const auto p = lattices::normalize(parse_rational_list(l.a));
    json norm = json::array();
    for (const auto& x : p.a) norm.push_back(x.get_str());
    r["a_normalized"] = norm;
    lp = lattices::lattice_presentation_oscillator(p, l.k, {l.turn});
    const auto h1 = lattices::abelianization(lp);
    r["h1"] = group_json(h1);
    if (l.turn == 1 || l.turn == 2 || l.turn == 4) {
      const auto closed = lattices::oscillator_h1_closed_form(p.a, l.k, {l.turn});
      r["closed_form"] = group_json(closed);
      r["matches_closed_form"] = closed == h1;
      o.report["provenance"] = "paper table";
    } else {
      o.report["provenance"] = "derived";
    }
  } else if (l.family == "tower") {
    lp = lattices::lattice_presentation_tower(l.l, l.m, integral(parse_rational_list(l.a), "-a"),
                                              integral(parse_rational_list(l.alpha), "--alpha"), l.k, {l.turn_j},
                                              {l.turn_i});
    r["h1"] = group_json(lattices::abelianization(lp));
    o.report["provenance"] = "derived";
  } else {
    throw InputError("--family must be oscillator or tower");
  }
  const auto cert = lattices::validate(lp);
  r["presentation"] = {{"generators", lp.generators}, {"checks", to_json(cert)}};
  r["rank"] = r["h1"]["rank"];
  r["torsion"] = r["h1"]["torsion"];
  o.report["verdict"] = all_pass(cert);
  o.exit_code = all_pass(cert) ? 0 : 1;
  return o;
}

Outcome run_lattice_table(const GlobalOptions& g, int turn, const std::vector<long>& ks) {
  Outcome o;
  o.report["input_digest"] = sha256_hex(g.command_line);
  o.report["provenance"] = "paper table";
  std::vector<exact::Integer> kk;
  for (long k : ks) {
    if (k < 1) throw InputError("k values must be positive");
    kk.emplace_back(k);
  }
  if (turn != 1 && turn != 2) throw InputError("--turn must be 1 (quarter) or 2 (half)");
  const auto t = lattices::dim6_table({turn}, kk);
  json rows = json::array();
  bool all = true;
  for (const auto& row : t.rows) {
    json comp = json::array();
    for (const auto& grp : row.computed) comp.push_back(group_json(grp));
    rows.push_back({{"residue", row.residue}, {"expected", row.expected}, {"b1", row.b1}, {"computed", comp},
                    {"matches", row.matches}});
    all = all && row.matches;
  }
  o.report["result"] = {{"turn", turn}, {"k", ks}, {"rows", rows}};
  o.report["verdict"] = all;
  o.text = lattices::render(t);
  o.exit_code = all ? 0 : 1;
  return o;
}

Outcome guarded(const GlobalOptions& g, const std::function<Outcome()>& f) {
  Outcome o;
  try {
    o = f();
  } catch (const std::invalid_argument& e) {
    o = Outcome{2, {{"error", e.what()}}, std::nullopt};
  } catch (const liealg::Unsupported& e) {
    o = Outcome{2, {{"error", e.what()}}, std::nullopt};
  } catch (const std::filesystem::filesystem_error& e) {
    o = Outcome{2, {{"error", e.what()}}, std::nullopt};
  }
  o.report["command"] = g.command_line;
  o.report["seed"] = g.seed;
  o.report["samples"] = g.samples;
  o.report["exit_code"] = o.exit_code;
  if (!g.report_path.empty()) write_atomic(g.report_path, o.report.dump(2) + "\n");
  return o;
}

std::string emit(const GlobalOptions& g, const Outcome& o) {
  if (o.text && !g.json) return *o.text;
  return (g.pretty ? o.report.dump(2) : o.report.dump()) + "\n";
}

}  // namespace vaisman::cli
