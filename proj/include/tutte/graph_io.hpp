#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tutte/multigraph.hpp"

namespace tutte {

/// Text graph format:
///
///   # comment
///   vertices 4
///   0 1
///   1 1      <- loop
///
/// The header must precede every edge line. Throws ParseError whose
/// position is the 1-based line number.
MultiGraph parse_graph(std::string_view text);
MultiGraph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const MultiGraph& g);

}  // namespace tutte
