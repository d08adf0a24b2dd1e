#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphaudit/graph.hpp"

namespace graphaudit {

/// Edge-list text format: one edge per line, `<label> <label>`, UTF-8,
/// lines starting with `#` and blank lines ignored.
LabeledEdgeList parse_edge_list_text(std::string_view text);

LabeledEdgeList read_edge_list_file(const std::filesystem::path& path);

/// Serializes edges in insertion order with original endpoint orientation,
/// so a cleaned file is reproduced byte-exactly after a round trip.
std::string to_edge_list_text(const Graph& g);

void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace graphaudit
