#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lvnet/matrix.hpp"

namespace lvnet {

/// n x p table of finite observations with one name per column.
class DataMatrix {
 public:
  DataMatrix() = default;
  /// Throws InvalidArgument on a non-finite entry, an empty table or a
  /// name count that does not match the column count. Empty `names`
  /// yields the defaults x1..xp.
  DataMatrix(Matrix values, std::vector<std::string> names = {});
  /// Column-major construction; every column must have the same length.
  static DataMatrix from_columns(const std::vector<std::vector<double>>& columns,
                                 std::vector<std::string> names = {});

  std::size_t n_rows() const noexcept { return values_.rows(); }
  std::size_t n_cols() const noexcept { return values_.cols(); }

  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  std::span<const double> row(std::size_t i) const { return values_.row(i); }
  std::vector<double> column(std::size_t j) const;
  const Matrix& values() const noexcept { return values_; }

  const std::vector<std::string>& col_names() const noexcept { return names_; }
  /// Index of a named column; throws InvalidArgument when absent.
  std::size_t index_of(const std::string& name) const;

  /// New table holding the given columns in the given order.
  DataMatrix select(std::span<const std::size_t> cols) const;
  /// All columns except `col`, in original order.
  DataMatrix drop(std::size_t col) const;

  friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

 private:
  Matrix values_;
  std::vector<std::string> names_;
};

std::vector<std::string> default_names(std::size_t p);

}  // namespace lvnet
