#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lvnet/data_matrix.hpp"
#include "lvnet/matrix.hpp"

namespace lvnet {

inline constexpr double kPivotTolerance = 1e-12;
inline constexpr double kEigenClampTolerance = 1e-10;

/// Eigen-decomposition of a symmetric matrix.
struct EigenPair {
  std::vector<double> eigenvalues;  // descending
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]
  int sweeps = 0;
};

/// Lower-triangular L with m = L L^T. Throws NotPositiveDefinite when a
/// pivot falls to kPivotTolerance or below.
Matrix cholesky(const SymMatrix& m);

/// m^{-1} for positive definite m via Cholesky and triangular solves.
SymMatrix invert_pd(const SymMatrix& m);

/// Solves m x = b for positive definite m.
std::vector<double> solve_pd(const SymMatrix& m, std::span<const double> b);

/// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
/// drops below 1e-12 (scaled by the matrix norm for large inputs); at most
/// 100 sweeps.
EigenPair eigen_sym(const SymMatrix& m);

/// Symmetric square root U diag(sqrt(L)) U^T. Eigenvalues in
/// [-kEigenClampTolerance, 0) are clamped to zero; anything lower throws
/// NegativeEigenvalue.
SymMatrix sqrt_sym(const SymMatrix& m);

enum class Denominator { n_minus_1, n };

std::vector<double> column_means(const DataMatrix& data);

/// Column-centered cross-product divided by n-1 or n. Throws TooFewRows
/// for fewer than two rows.
SymMatrix sample_covariance(const DataMatrix& data,
                            Denominator denominator = Denominator::n_minus_1);

/// Covariance rescaled to unit diagonal.
SymMatrix correlation_from_covariance(const SymMatrix& cov);

}  // namespace lvnet
