#pragma once

// Test-only reference computations. Nothing here calls into the library's
// factorisations, so they can check it independently.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lvnet/matrix.hpp"

namespace lvnet::testing {

/// Gauss-Jordan inverse with partial pivoting.
inline Matrix gauss_jordan_inverse(const Matrix& m) {
  const std::size_t p = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(p);
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (a(piv, c) == 0.0) throw std::runtime_error("singular");
    for (std::size_t k = 0; k < p; ++k) {
      std::swap(a(c, k), a(piv, k));
      std::swap(inv(c, k), inv(piv, k));
    }
    const double d = a(c, c);
    for (std::size_t k = 0; k < p; ++k) {
      a(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      const double f = a(r, c);
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < p; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

/// Solves a x = b with Gaussian elimination (via the Gauss-Jordan inverse).
inline std::vector<double> gauss_solve(const Matrix& a, const std::vector<double>& b) {
  const Matrix inv = gauss_jordan_inverse(a);
  std::vector<double> x(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) x[i] += inv(i, k) * b[k];
  return x;
}

/// 2x2 inverse by adjugate / determinant.
inline Matrix adjugate_inverse_2x2(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  return Matrix{{d / det, -b / det}, {-c / det, a / det}};
}

/// Random positive definite matrix: v v^T + diag(offsets) with offsets in
/// [0.5, 1.5] and v in [-2, 2].
inline SymMatrix random_pd(std::size_t p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> load(-2.0, 2.0);
  std::uniform_real_distribution<double> off(0.5, 1.5);
  std::vector<double> v(p);
  for (auto& x : v) x = load(rng);
  SymMatrix m(p);
  for (std::size_t i = 0; i < p; ++i) {
    m.set(i, i, v[i] * v[i] + off(rng));
    for (std::size_t j = 0; j < i; ++j) m.set(i, j, v[i] * v[j]);
  }
  return m;
}

/// Random well-conditioned PD matrix with general structure: A A^T / p + I.
inline SymMatrix random_dense_pd(std::size_t p, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  Matrix a(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) a(i, j) = z(rng);
  SymMatrix m(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < p; ++k) s += a(i, k) * a(j, k);
      m.set(i, j, s / static_cast<double>(p) + (i == j ? 1.0 : 0.0));
    }
  return m;
}

/// Random n x p data with correlated columns (standard normal mixed through
/// a random lower-triangular matrix).
inline Matrix random_data(std::size_t n, std::size_t p, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  Matrix mix(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j <= i; ++j) mix(i, j) = (i == j ? 1.0 : 0.5 * z(rng));
  Matrix out(n, p);
  std::vector<double> u(p);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto& x : u) x = z(rng);
    for (std::size_t i = 0; i < p; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j <= i; ++j) s += mix(i, j) * u[j];
      out(r, i) = s + 1.5;  // nonzero mean
    }
  }
  return out;
}

/// Naive two-pass covariance of two columns.
inline double naive_cov(const std::vector<double>& a, const std::vector<double>& b) {
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(a.size());
  mb /= static_cast<double>(b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - ma) * (b[i] - mb);
  return s / static_cast<double>(a.size() - 1);
}

inline double max_abs_offdiag_minus_identity(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace lvnet::testing
