#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twistbar/monoid.hpp"

namespace twistbar {

// Monoid file format:
//   { "elements": ["e", "x", ...], "unit": "e",
//     "mult": [["e", "x"], ["x", "e"]],   // row = left factor
//     "tau":  ["e", "x"] }                // indexed like "elements"
// Element order in "elements" defines the ids.

/// Throws ParseError on invalid JSON, missing fields, ragged tables or unknown names.
MonoidTables parse_monoid_json(std::string_view text);
MonoidTables load_monoid_file(const std::filesystem::path& path);

std::string monoid_to_json(const TwistedMonoid& monoid);

}  // namespace twistbar
