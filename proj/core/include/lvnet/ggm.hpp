#pragma once

#include <cstddef>

#include "lvnet/graph.hpp"
#include "lvnet/matrix.hpp"

namespace lvnet {

inline constexpr double kDefaultEdgeTolerance = 1e-10;

/// Matrix of partial correlations rho_{ij|rest}: unit diagonal, symmetric,
/// off-diagonals within [-1, 1].
class PartialCorrMatrix {
 public:
  explicit PartialCorrMatrix(SymMatrix values);

  std::size_t dim() const noexcept { return values_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const SymMatrix& matrix() const noexcept { return values_; }

 private:
  SymMatrix values_;
};

/// -theta_ij / sqrt(theta_ii * theta_jj) off the diagonal. Throws
/// NotPositiveDefinite if a diagonal entry is not positive.
PartialCorrMatrix partial_correlations(const SymMatrix& theta);

/// Edge i-j iff |theta_ij| > tol. Weights carry theta_ij, or the partial
/// correlation when `kind` asks for it.
Graph graph_from_concentration(const SymMatrix& theta, double tol = kDefaultEdgeTolerance,
                               WeightKind kind = WeightKind::partial_covariance);

/// Partial correlation of variables 3 and 1 given 2 from the pairwise
/// correlations: (r13 - r12 r32) / sqrt((1 - r12^2)(1 - r32^2)).
/// Throws DegenerateCorrelation if |r| >= 1 or a denominator underflows.
double partial_corr_triple(double r13, double r12, double r32);

}  // namespace lvnet
