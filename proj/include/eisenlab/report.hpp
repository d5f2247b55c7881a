#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "eisenlab/hull.hpp"
#include "eisenlab/verifiers.hpp"

namespace eisenlab {

/// Keys in schema order. elapsed_ms is null unless with_timing, so that
/// identical runs give identical bytes.
nlohmann::ordered_json report_to_json(const VerificationReport& report, bool with_timing = false);

/// Inverse of report_to_json; certificate generators are rebuilt from their
/// source index. Throws ParseError.
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// Pretty-printed JSON plus trailing newline. Throws Error naming the path.
void emit_report(const VerificationReport& report, const std::string& path, bool with_timing = false);

/// Short human-readable summary, one item per line.
std::string report_summary(const VerificationReport& report);

std::string hull_svg(const HullChain& chain);
void emit_hull_svg(const HullChain& chain, const std::string& path);

}  // namespace eisenlab
