#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lvnet/data_matrix.hpp"
#include "lvnet/matrix.hpp"

namespace lvnet {

/// Header row followed by rectangular rows of finite numbers.
/// Throws EmptyFile, RaggedRows or ParseError (with 1-based line/column).
DataMatrix parse_csv(std::istream& in, const std::string& source = "<stream>");
/// As parse_csv; IoError when the file cannot be opened.
DataMatrix load_csv(const std::filesystem::path& path);

/// Header plus rows, numbers with 17 significant digits so a reload is exact.
void write_csv(std::ostream& out, const DataMatrix& data);
void save_csv(const std::filesystem::path& path, const DataMatrix& data);

/// Square CSV (header + p rows of p numbers), symmetrised on ingest.
SymMatrix load_sym_matrix_csv(const std::filesystem::path& path);

}  // namespace lvnet
