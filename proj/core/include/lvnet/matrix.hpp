#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lvnet {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Largest |a(i,j) - b(i,j)|; dimensions must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Symmetric p x p matrix. Every write goes to both (i,j) and (j,i), so
/// the stored entries are exactly symmetric at all times.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim, double fill = 0.0);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  /// Ingests an arbitrary square matrix as (m + m^T) / 2.
  static SymMatrix symmetrize(const Matrix& m);
  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return full_.rows(); }

  double operator()(std::size_t i, std::size_t j) const { return full_(i, j); }
  void set(std::size_t i, std::size_t j, double v) {
    full_(i, j) = v;
    full_(j, i) = v;
  }

  const Matrix& matrix() const noexcept { return full_; }
  std::vector<double> diag() const;

  /// Principal submatrix on the given indices (in the given order).
  SymMatrix submatrix(std::span<const std::size_t> idx) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix full_;
};

inline double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace lvnet
