#pragma once

#include <cstddef>
#include <vector>

#include "lvnet/data_matrix.hpp"
#include "lvnet/graph.hpp"
#include "lvnet/matrix.hpp"
#include "lvnet/regress.hpp"

namespace lvnet {

/// Decides whether a single directed coefficient beta_ij counts as nonzero.
struct Selector {
  enum class Kind { significance, magnitude };

  Kind kind = Kind::significance;
  double threshold = 0.01;  // alpha for significance, tol for magnitude
  bool bonferroni = false;  // divide alpha by the p(p-1) tests

  static Selector significance(double alpha, bool bonferroni = false);
  static Selector magnitude(double tol);
};

struct NodewiseOptions {
  FitMode mode = FitMode::centered;
  unsigned threads = 1;  // 0 picks hardware concurrency
};

struct NodewiseResult {
  Graph graph;
  std::vector<RegressionFit> fits;  // fits[i] regresses node i on the rest
  Matrix coefficients;              // (i, j) = beta_ij, zero diagonal
  std::vector<std::vector<bool>> selected;
};

/// Neighbourhood selection by OLS: one regression per node, combined under
/// `rule`. Edge weights are the estimated partial correlations
/// sign(beta_ij) sqrt(beta_ij beta_ji).
NodewiseResult nodewise_network(const DataMatrix& data, const Selector& selector,
                                EdgeRule rule, const NodewiseOptions& options = {});

/// Symmetrises directed selections into a graph.
Graph combine_directed(const Matrix& coefficients,
                       const std::vector<std::vector<bool>>& selected, EdgeRule rule);

/// Runs `task(i)` for i in [0, count) on up to `threads` workers.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task);

}  // namespace lvnet

#include "lvnet/detail/parallel.hpp"
