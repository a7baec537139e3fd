#include "lvnet/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lvnet/errors.hpp"

namespace lvnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

DataMatrix parse_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw EmptyFile(source + " has no header row");
  for (auto cell : split(line)) names.emplace_back(cell);

  std::vector<double> values;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != names.size())
      throw RaggedRows(source + " line " + std::to_string(line_no) + " has " +
                       std::to_string(cells.size()) + " cells, header has " +
                       std::to_string(names.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string_view cell = cells[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() ||
          !std::isfinite(v))
        throw ParseError(source + " line " + std::to_string(line_no) + ", column " +
                             std::to_string(c + 1) + " ('" + names[c] + "'): '" +
                             std::string(cell) + "' is not a finite number",
                         line_no, c + 1);
      values.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw EmptyFile(source + " has a header but no data rows");

  Matrix m(rows, names.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < names.size(); ++j) m(i, j) = values[i * names.size() + j];
  return DataMatrix(std::move(m), std::move(names));
}

DataMatrix load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_csv(in, path.string());
}

void write_csv(std::ostream& out, const DataMatrix& data) {
  const auto& names = data.col_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (names[j].find_first_of(",\n\r") != std::string::npos)
      throw InvalidArgument("column name '" + names[j] + "' cannot be written as CSV");
    out << (j ? "," : "") << names[j];
  }
  out << '\n';
  char buf[32];
  for (std::size_t i = 0; i < data.n_rows(); ++i) {
    for (std::size_t j = 0; j < data.n_cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", data(i, j));
      out << (j ? "," : "") << buf;
    }
    out << '\n';
  }
}

void save_csv(const std::filesystem::path& path, const DataMatrix& data) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_csv(out, data);
  if (!out) throw IoError("failed writing " + path.string());
}

SymMatrix load_sym_matrix_csv(const std::filesystem::path& path) {
  const DataMatrix d = load_csv(path);
  if (d.n_rows() != d.n_cols())
    throw InvalidArgument(path.string() + " is " + std::to_string(d.n_rows()) + "x" +
                          std::to_string(d.n_cols()) + ", expected a square matrix");
  return SymMatrix::symmetrize(d.values());
}

}  // namespace lvnet
