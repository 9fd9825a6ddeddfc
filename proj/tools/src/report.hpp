#pragma once

#include "vaisman/certificate.hpp"

#include <json.hpp>

#include <string>

namespace vaisman::cli {

/// Hex SHA-256.
std::string sha256_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

/// Writes to a sibling temporary file and renames it over the target.
void write_atomic(const std::string& path, const std::string& contents);

nlohmann::json to_json(const Certificate& c);

}  // namespace vaisman::cli
