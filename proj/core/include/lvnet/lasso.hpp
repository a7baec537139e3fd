#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lvnet/data_matrix.hpp"
#include "lvnet/graph.hpp"
#include "lvnet/matrix.hpp"

namespace lvnet {

struct LassoOptions {
  double penalty = 0.0;
  std::size_t max_iter = 10000;  // full coordinate sweeps
  double tol = 1e-8;             // on the largest coefficient change in a sweep
};

struct LassoFit {
  std::string response;
  std::vector<std::string> predictors;
  std::vector<double> coefficients;
  double intercept = 0.0;  // mean(y) - mean(x)^T beta
  double penalty = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Largest violation of the stationarity conditions on the centred data.
  double kkt_violation = 0.0;
};

double soft_threshold(double z, double gamma);

/// Smallest penalty at which every coefficient is zero: max_j |x_j^T y| / n
/// on centred data.
double lasso_max_penalty(const DataMatrix& X, std::span<const double> y);

/// Minimises (1/2n) ||y - X beta||^2 + penalty ||beta||_1 on centred data by
/// cyclic coordinate descent. Hitting max_iter is not an error: the fit is
/// returned with converged == false.
LassoFit lasso_fit(const DataMatrix& X, std::span<const double> y,
                   const LassoOptions& options, std::string response = "y");

struct LassoNetworkOptions {
  std::size_t max_iter = 10000;
  double tol = 1e-8;
  unsigned threads = 1;
};

struct LassoNetworkResult {
  Graph graph;
  std::vector<LassoFit> fits;
  Matrix coefficients;  // (i, j) = beta_ij
};

/// Nodewise lasso; beta_ij != 0 selects the directed edge.
LassoNetworkResult lasso_network(const DataMatrix& data, double penalty, EdgeRule rule,
                                 const LassoNetworkOptions& options = {});

struct PenaltySelection {
  double penalty = 0.0;
  std::vector<double> grid;
  std::vector<double> validation_error;  // mean squared error summed over nodes
};

/// Picks the grid penalty whose nodewise fits on `train` predict `validation`
/// best. Ties go to the larger penalty.
PenaltySelection select_penalty_by_validation(const DataMatrix& train,
                                              const DataMatrix& validation,
                                              std::span<const double> grid,
                                              const LassoNetworkOptions& options = {});

}  // namespace lvnet
