#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pairdom/graph.hpp"

namespace pairdom {

/// Edge-list text: "n m" on the first line, then m lines "u v". Lines
/// starting with '#' are comments. Errors raise ParseError naming the line.
Graph parse_graph(std::string_view text);

/// Canonical form: header plus sorted "u v" lines with u < v, LF-terminated.
std::string serialize_graph(const Graph &g);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

/// {"size": k, "vertices": [...], "pairs": [[u, v], ...]}
nlohmann::json solution_to_json(const PairedSolution &sol);
/// Throws ParseError on schema violations.
PairedSolution solution_from_json(const nlohmann::json &doc);

} // namespace pairdom
