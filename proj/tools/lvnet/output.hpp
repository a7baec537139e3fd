#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lvnet/graph.hpp"
#include "lvnet/matrix.hpp"

namespace lvnet::cli {

/// Writes `text` to `path`, or to stdout when no path is given.
void emit(const std::string& text, const std::optional<std::string>& path);

/// Fixed-width text rendering of a labelled square matrix.
std::string matrix_table(const Matrix& m, const std::vector<std::string>& names);

/// One "a -- b  weight" line per edge.
std::string edge_table(const Graph& g, const std::vector<std::string>& names);

std::string format_number(double x);

}  // namespace lvnet::cli
