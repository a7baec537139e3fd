#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lvnet/graph.hpp"

namespace lvnet {

/// Undirected DOT text. Nodes ascending (1-based), edges sorted by (i, j),
/// weights with 4 significant digits; output is a pure function of the graph.
/// Non-empty `names` adds a label attribute to each node line.
std::string to_dot(const Graph& g, const std::vector<std::string>& names = {});

/// Writes to_dot(g) to `path`; IoError on failure.
void export_dot(const Graph& g, const std::filesystem::path& path,
                const std::vector<std::string>& names = {});

}  // namespace lvnet
