#include "lvnet/data_matrix.hpp"

#include <cmath>

#include "lvnet/errors.hpp"

namespace lvnet {

std::vector<std::string> default_names(std::size_t p) {
  std::vector<std::string> names;
  names.reserve(p);
  for (std::size_t j = 0; j < p; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

DataMatrix::DataMatrix(Matrix values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
  if (values_.rows() == 0 || values_.cols() == 0)
    throw InvalidArgument("DataMatrix: needs at least one row and one column");
  if (names_.empty()) names_ = default_names(values_.cols());
  if (names_.size() != values_.cols())
    throw InvalidArgument("DataMatrix: " + std::to_string(names_.size()) + " names for " +
                          std::to_string(values_.cols()) + " columns");
  for (std::size_t i = 0; i < values_.rows(); ++i)
    for (std::size_t j = 0; j < values_.cols(); ++j)
      if (!std::isfinite(values_(i, j)))
        throw InvalidArgument("DataMatrix: non-finite value at row " + std::to_string(i + 1) +
                              ", column '" + names_[j] + "'");
}

DataMatrix DataMatrix::from_columns(const std::vector<std::vector<double>>& columns,
                                    std::vector<std::string> names) {
  if (columns.empty()) throw InvalidArgument("DataMatrix: no columns");
  const std::size_t n = columns.front().size();
  Matrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw InvalidArgument("DataMatrix: columns of unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return DataMatrix(std::move(m), std::move(names));
}

std::vector<double> DataMatrix::column(std::size_t j) const {
  std::vector<double> c(n_rows());
  for (std::size_t i = 0; i < n_rows(); ++i) c[i] = values_(i, j);
  return c;
}

std::size_t DataMatrix::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < names_.size(); ++j)
    if (names_[j] == name) return j;
  throw InvalidArgument("no column named '" + name + "'");
}

DataMatrix DataMatrix::select(std::span<const std::size_t> cols) const {
  Matrix m(n_rows(), cols.size());
  std::vector<std::string> names;
  names.reserve(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= n_cols()) throw InvalidArgument("DataMatrix::select: column out of range");
    names.push_back(names_[cols[k]]);
    for (std::size_t i = 0; i < n_rows(); ++i) m(i, k) = values_(i, cols[k]);
  }
  return DataMatrix(std::move(m), std::move(names));
}

DataMatrix DataMatrix::drop(std::size_t col) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n_cols(); ++j)
    if (j != col) keep.push_back(j);
  return select(keep);
}

}  // namespace lvnet
