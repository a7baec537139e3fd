#include "lvnet/ggm.hpp"

#include <cmath>
#include <string>

#include "lvnet/errors.hpp"

namespace lvnet {

namespace {

constexpr double kCorrelationSlack = 1e-12;
constexpr double kDenominatorFloor = 1e-12;

}  // namespace

PartialCorrMatrix::PartialCorrMatrix(SymMatrix values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.dim(); ++i) {
    if (values_(i, i) != 1.0) throw InvalidArgument("partial correlation diagonal must be 1");
    for (std::size_t j = 0; j < i; ++j)
      if (!(std::abs(values_(i, j)) <= 1.0 + kCorrelationSlack))
        throw InvalidArgument("partial correlation outside [-1, 1]");
  }
}

PartialCorrMatrix partial_correlations(const SymMatrix& theta) {
  const std::size_t p = theta.dim();
  for (std::size_t i = 0; i < p; ++i)
    if (!(theta(i, i) > 0.0))
      throw NotPositiveDefinite("concentration diagonal " + std::to_string(theta(i, i)) +
                                " at index " + std::to_string(i));
  SymMatrix rho(p);
  for (std::size_t i = 0; i < p; ++i) {
    rho.set(i, i, 1.0);
    for (std::size_t j = 0; j < i; ++j)
      rho.set(i, j, -theta(i, j) / std::sqrt(theta(i, i) * theta(j, j)));
  }
  return PartialCorrMatrix(std::move(rho));
}

Graph graph_from_concentration(const SymMatrix& theta, double tol, WeightKind kind) {
  if (!(tol > 0.0)) throw InvalidArgument("edge tolerance must be positive");
  const std::size_t p = theta.dim();
  Graph g(p, kind);
  if (kind == WeightKind::regression_coefficient)
    throw InvalidArgument("concentration graphs carry partial covariances or correlations");

  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (!(std::abs(theta(i, j)) > tol)) continue;
      double w = theta(i, j);
      if (kind == WeightKind::partial_correlation) {
        if (!(theta(i, i) > 0.0) || !(theta(j, j) > 0.0))
          throw NotPositiveDefinite("nonpositive concentration diagonal");
        w = -theta(i, j) / std::sqrt(theta(i, i) * theta(j, j));
      }
      g.add_edge(i, j, w);
    }
  }
  return g;
}

double partial_corr_triple(double r13, double r12, double r32) {
  for (double r : {r13, r12, r32})
    if (!(std::abs(r) < 1.0))
      throw DegenerateCorrelation("correlation " + std::to_string(r) + " not in (-1, 1)");
  const double d12 = 1.0 - r12 * r12;
  const double d32 = 1.0 - r32 * r32;
  if (d12 <= kDenominatorFloor || d32 <= kDenominatorFloor)
    throw DegenerateCorrelation("conditioning variable is (nearly) collinear");
  return (r13 - r12 * r32) / std::sqrt(d12 * d32);
}

}  // namespace lvnet
