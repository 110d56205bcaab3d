#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "ctam/diagram.hpp"
#include "ctam/field.hpp"
#include "ctam/path_group.hpp"

namespace ctam {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// A report document and whether every verification it ran succeeded.
/// Expected negative outcomes (a non-orientable class, a cross-class pair
/// without witness) are data and do not clear `verified`.
struct RunResult {
  Json report;
  bool verified = true;
};

/// tool, version, command, field, diagram hash, spanning tree.
Json report_header(const std::string& command, const Field& F, const Diagram& d, const SpanningData& sd);

RunResult classify_command(const Diagram& d, const Field& F);
RunResult verify_command(const Diagram& d, const Pointing& delta, const Field& F);
RunResult oracle_command(const Diagram& d, const Field& F, std::uint64_t seed);
RunResult complete_command(const Diagram& d, const Pointing& delta, const Field& F);

/// Indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace ctam
