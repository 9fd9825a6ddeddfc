#pragma once

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vaisman::cli {

struct GlobalOptions {
  unsigned long long seed = 1;
  std::size_t samples = 100;
  /// Only used for the floating-point adapted block basis.
  double tolerance = 1e-9;
  bool json = false;
  bool pretty = false;
  std::string command_line;
  /// Also write the report here (atomically).
  std::string report_path;
};

/// Exit code 0: verdict true, 1: verdict false, 2: usage or input error.
struct Outcome {
  int exit_code = 0;
  nlohmann::json report;
  /// Plain-text rendering (tables), printed instead of JSON unless --json.
  std::optional<std::string> text;
};

Outcome run_verify(const GlobalOptions& g, const std::string& path, const std::string& structure);

struct ConstructOptions {
  std::string kind;
  std::string from;
  std::string beta = "omega";
  std::vector<std::string> a;
  std::vector<std::string> alpha;
  std::size_t l = 0;
  std::size_t m = 0;
  std::string name;
  std::string out;
};
Outcome run_construct(const GlobalOptions& g, const ConstructOptions& o);

Outcome run_reduce(const GlobalOptions& g, const std::string& from, const std::string& out);
Outcome run_classify(const GlobalOptions& g, const std::string& path, std::size_t dim);

struct LatticeOptions {
  std::string family = "oscillator";
  std::vector<std::string> a;
  std::vector<std::string> alpha;
  std::size_t l = 0;
  std::size_t m = 1;
  long k = 1;
  int turn = 4;
  int turn_j = 4;
  int turn_i = 4;
};
Outcome run_lattice_h1(const GlobalOptions& g, const LatticeOptions& o);
Outcome run_lattice_table(const GlobalOptions& g, int turn, const std::vector<long>& ks);

/// Runs f; input errors become exit 2 with {"error": ...}. Common report
/// fields (command, seed, samples) are filled in, and the report file is written.
Outcome guarded(const GlobalOptions& g, const std::function<Outcome()>& f);

/// What goes to stdout.
std::string emit(const GlobalOptions& g, const Outcome& o);

}  // namespace vaisman::cli
