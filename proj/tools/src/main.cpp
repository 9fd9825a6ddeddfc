#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace vaisman::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and construction of Vaisman, Sasakian, coKahler and LSA structures on Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(i ? argv[i] : "vaisman");
  app.add_option("--seed", g.seed, "Seed for every random sample")->capture_default_str();
  app.add_option("--samples", g.samples, "Number of random samples")->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "Tolerance of the floating-point adapted block basis")->capture_default_str();
  app.add_flag("--json", g.json, "Emit JSON even where a rendered table is available");
  app.add_flag("--pretty", g.pretty, "Indent JSON output");
  app.add_option("--report", g.report_path, "Also write the report to this file");

  std::function<Outcome()> action;

  auto* verify = app.add_subcommand("verify", "Check a structure given in a JSON file");
  std::string vpath, structure;
  verify->add_option("file", vpath, "Input JSON")->required();
  verify->add_option("--structure", structure, "Structure to verify")
      ->required()
      ->check(CLI::IsMember({"lie", "metric", "hermitian", "lck", "vaisman", "kahler-flat", "sasakian", "cokahler", "lsa"}));
  verify->callback([&] { action = [&] { return run_verify(g, vpath, structure); }; });

  auto* construct = app.add_subcommand("construct", "Build an algebra and write it as JSON");
  ConstructOptions c;
  construct->add_option("kind", c.kind, "What to build")
      ->required()
      ->check(CLI::IsMember({"central-ext", "double-ext", "vaisman", "cokahler", "lsa", "oscillator", "tower", "family"}));
  construct->add_option("--from", c.from, "Input JSON");
  construct->add_option("--beta", c.beta, "omega (fundamental form) or file (the \"beta\" key)")->capture_default_str();
  construct->add_option("-a", c.a, "Rotation speeds")->delimiter(',');
  construct->add_option("--alpha", c.alpha, "Angles of D (tower)")->delimiter(',');
  construct->add_option("-l", c.l, "Number of (e, f) planes (tower)");
  construct->add_option("-m", c.m, "Number of (u, v) planes (tower)");
  construct->add_option("--name", c.name, "Catalogue family, e.g. \"R x s5\" or Dr:1/2");
  construct->add_option("-o,--out", c.out, "Output JSON")->required();
  construct->callback([&] {
    action = [&] {
      if (c.kind == "tower" && c.a.size() != c.m) throw std::invalid_argument("-m must equal the number of -a entries");
      return run_construct(g, c);
    };
  });

  auto* reduce = app.add_subcommand("reduce", "Recover the Kahler flat package of a Vaisman algebra");
  std::string rfrom, rout;
  reduce->add_option("--from", rfrom, "Vaisman JSON")->required();
  reduce->add_option("-o,--out", rout, "Package JSON")->required();
  reduce->callback([&] { action = [&] { return run_reduce(g, rfrom, rout); }; });

  auto* cls = app.add_subcommand("classify", "Match against the dim-4/dim-6 catalogue");
  std::string cpath;
  std::size_t cdim = 6;
  cls->add_option("--dim", cdim, "Expected dimension")->required();
  cls->add_option("file", cpath, "Input JSON")->required();
  cls->callback([&] { action = [&] { return run_classify(g, cpath, cdim); }; });

  auto* lattice = app.add_subcommand("lattice", "Lattices and first homology");
  lattice->require_subcommand(1);
  auto* h1 = lattice->add_subcommand("h1", "First homology of one lattice");
  LatticeOptions lo;
  h1->add_option("--family", lo.family, "oscillator or tower")->capture_default_str();
  h1->add_option("-a", lo.a, "Rotation speeds")->delimiter(',');
  h1->add_option("--alpha", lo.alpha, "Angles (tower)")->delimiter(',');
  h1->add_option("-l", lo.l, "Number of (e, f) planes (tower)");
  h1->add_option("-m", lo.m, "Number of (u, v) planes (tower)");
  h1->add_option("-k", lo.k, "Gamma_k")->capture_default_str();
  h1->add_option("--turn", lo.turn, "Quarter turns of the oscillator action")->capture_default_str();
  h1->add_option("--turn-j", lo.turn_j, "Quarter turns j (tower)")->capture_default_str();
  h1->add_option("--turn-i", lo.turn_i, "Quarter turns i (tower)")->capture_default_str();
  h1->callback([&] { action = [&] { return run_lattice_h1(g, lo); }; });
  auto* table = lattice->add_subcommand("table", "The dim-6 H_1 tables");
  int tturn = 2;
  std::vector<long> ks{1, 2, 3};
  table->add_option("--turn", tturn, "1 (quarter) or 2 (half)")->capture_default_str();
  table->add_option("-k", ks, "k values")->delimiter(',');
  table->callback([&] { action = [&] { return run_lattice_table(g, tturn, ks); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const Outcome o = guarded(g, action);
  if (o.exit_code == 2 && o.report.contains("error"))
    std::cerr << "error: " << o.report["error"].get<std::string>() << "\n";
  std::cout << emit(g, o);
  return o.exit_code;
}
