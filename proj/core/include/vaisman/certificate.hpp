#pragma once

#include <string>
#include <vector>

namespace vaisman {

/// One named exact check; `witness` describes the failure (or a value of note).
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

using Certificate = std::vector<Check>;

inline bool all_pass(const Certificate& c) {
  for (const auto& k : c)
    if (!k.pass) return false;
  return true;
}

inline const Check* find_check(const Certificate& c, const std::string& name) {
  for (const auto& k : c)
    if (k.name == name) return &k;
  return nullptr;
}

}  // namespace vaisman
