#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lvnet/errors.hpp"
#include "lvnet/lasso.hpp"
#include "lvnet/nodewise.hpp"
#include "lvnet/regress.hpp"
#include "lvnet/sim.hpp"
#include "lvnet/ulvm.hpp"
#include "support/oracles.hpp"

namespace lvnet {
namespace {

double l1(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

TEST(SoftThreshold, Cases) {
  EXPECT_EQ(soft_threshold(0.5, 0.2), 0.3);
  EXPECT_EQ(soft_threshold(-0.5, 0.2), -0.3);
  EXPECT_EQ(soft_threshold(0.1, 0.2), 0.0);
}

TEST(LassoFit, ZeroPenaltyMatchesOls) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const DataMatrix data(testing::random_data(120, 5, rng));
    const DataMatrix X = data.drop(4);
    const auto y = data.column(4);
    const LassoFit lf = lasso_fit(X, y, LassoOptions{0.0});
    const RegressionFit of = ols_fit(X, y);
    ASSERT_TRUE(lf.converged);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(lf.coefficients[j], of.coefficients[j], 1e-6);
  }
}

TEST(LassoFit, FullShrinkageThreshold) {
  std::mt19937_64 rng(52);
  const DataMatrix data(testing::random_data(100, 4, rng));
  const DataMatrix X = data.drop(0);
  const auto y = data.column(0);
  const double lmax = lasso_max_penalty(X, y);
  const LassoFit at = lasso_fit(X, y, LassoOptions{lmax});
  for (double b : at.coefficients) EXPECT_EQ(b, 0.0);
  const LassoFit above = lasso_fit(X, y, LassoOptions{lmax * 1.5});
  for (double b : above.coefficients) EXPECT_EQ(b, 0.0);
  const LassoFit below = lasso_fit(X, y, LassoOptions{lmax * 0.9});
  EXPECT_GT(l1(below.coefficients), 0.0);
}

TEST(LassoFit, OrthonormalDesignClosedForm) {
  // Centred, orthogonal columns with x_j^T x_j / n = 1.
  const std::size_t n = 8;
  std::vector<std::vector<double>> cols{{1, -1, 1, -1, 1, -1, 1, -1},
                                        {1, 1, -1, -1, 1, 1, -1, -1},
                                        {1, 1, 1, 1, -1, -1, -1, -1}};
  const DataMatrix X = DataMatrix::from_columns(cols);
  const std::vector<double> y{2.1, 0.3, -1.7, 0.9, 1.4, -0.6, 0.2, -2.2};
  for (double pen : {0.0, 0.05, 0.2, 0.5, 1.0}) {
    const LassoFit fit = lasso_fit(X, y, LassoOptions{pen});
    ASSERT_TRUE(fit.converged);
    for (std::size_t j = 0; j < 3; ++j) {
      double xty = 0.0;
      for (std::size_t i = 0; i < n; ++i) xty += cols[j][i] * y[i];
      EXPECT_NEAR(fit.coefficients[j], soft_threshold(xty / n, pen), 1e-8) << pen << " " << j;
    }
  }
}

TEST(LassoFit, KktHoldsOnConvergence) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const DataMatrix data(testing::random_data(80, 6, rng));
    const DataMatrix X = data.drop(5);
    const auto y = data.column(5);
    const double pen = lasso_max_penalty(X, y) * (0.05 + 0.045 * trial);
    const LassoFit fit = lasso_fit(X, y, LassoOptions{pen});
    ASSERT_TRUE(fit.converged);
    EXPECT_LT(fit.kkt_violation, 1e-6);

    // Recompute the conditions independently on the centred data.
    const auto means = column_means(data);
    double ymean = means[5];
    std::vector<double> r(80);
    for (std::size_t i = 0; i < 80; ++i) {
      r[i] = y[i] - ymean;
      for (std::size_t j = 0; j < 5; ++j) r[i] -= fit.coefficients[j] * (X(i, j) - means[j]);
    }
    for (std::size_t j = 0; j < 5; ++j) {
      double g = 0.0;
      for (std::size_t i = 0; i < 80; ++i) g += (X(i, j) - means[j]) * r[i];
      g /= 80.0;
      if (fit.coefficients[j] != 0.0)
        EXPECT_NEAR(g, pen * std::copysign(1.0, fit.coefficients[j]), 1e-6);
      else
        EXPECT_LE(std::abs(g), pen + 1e-6);
    }
  }
}

TEST(LassoFit, L1NormDecreasesAlongPenaltyGrid) {
  std::mt19937_64 rng(54);
  const DataMatrix data(testing::random_data(150, 7, rng));
  const DataMatrix X = data.drop(6);
  const auto y = data.column(6);
  const double lmax = lasso_max_penalty(X, y);
  double previous = INFINITY;
  for (int k = 0; k < 10; ++k) {
    const double pen = lmax * k / 9.0;
    const double norm = l1(lasso_fit(X, y, LassoOptions{pen}).coefficients);
    EXPECT_LE(norm, previous + 1e-9);
    previous = norm;
  }
}

TEST(LassoFit, ReportsNonConvergence) {
  std::mt19937_64 rng(55);
  const DataMatrix data(testing::random_data(60, 5, rng));
  const LassoFit fit = lasso_fit(data.drop(0), data.column(0), LassoOptions{0.0, 1, 1e-14});
  EXPECT_FALSE(fit.converged);
  EXPECT_EQ(fit.iterations, 1u);
  EXPECT_THROW(lasso_fit(data.drop(0), data.column(0), LassoOptions{-1.0}), InvalidArgument);
  EXPECT_THROW(lasso_fit(data.drop(0), data.column(0), LassoOptions{0.1, 0}), InvalidArgument);
}

TEST(LassoNetwork, PenaltyAboveThresholdGivesEmptyGraph) {
  const DataMatrix data = sample_ulvm(UlvmModel({1, 0.8, 0.6, 0.4}), 200, 1).data;
  double lmax = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    lmax = std::max(lmax, lasso_max_penalty(data.drop(i), data.column(i)));
  EXPECT_EQ(lasso_network(data, lmax * 1.01, EdgeRule::or_rule).graph.edge_count(), 0u);
}

TEST(LassoNetwork, ValidatedPenaltyRecoversSparseChain) {
  // Halving grid below the full-shrinkage threshold. Validation error favours
  // the smallest penalty offered, so a much finer grid over-selects.
  const SymMatrix sigma = invert_pd(chain_concentration(5, -0.4));
  int recovered = 0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const DataMatrix train = sample_covariance_model(sigma, 2000, 100 + 2 * s);
    const DataMatrix valid = sample_covariance_model(sigma, 2000, 101 + 2 * s);
    double lmax = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
      lmax = std::max(lmax, lasso_max_penalty(train.drop(i), train.column(i)));
    const std::vector<double> grid{0.8 * lmax, 0.4 * lmax, 0.2 * lmax, 0.1 * lmax};
    const PenaltySelection sel = select_penalty_by_validation(train, valid, grid);
    recovered += lasso_network(train, sel.penalty, EdgeRule::and_rule).graph.same_edges(chain_graph(5));
  }
  EXPECT_GT(recovered, seeds / 2);
}

TEST(LassoNetwork, AndRuleSubsetOfOrRule) {
  const DataMatrix data = sample_ulvm(UlvmModel(std::vector<double>(6, 1.0)), 300, 9).data;
  const Graph a = lasso_network(data, 0.1, EdgeRule::and_rule).graph;
  const Graph o = lasso_network(data, 0.1, EdgeRule::or_rule).graph;
  EXPECT_TRUE(a.edges_subset_of(o));
}

TEST(LassoNetwork, DenseTruthLassoNoDenserThanOls) {
  // Complete truth: the and-rule lasso graph should not exceed the OLS
  // significance graph, and should be strictly smaller at penalty 0.2.
  const int seeds = 20;
  int not_denser = 0, strictly_smaller = 0;
  for (int s = 0; s < seeds; ++s) {
    const DataMatrix data = sample_ulvm(UlvmModel(std::vector<double>(10, 1.0)), 500, 800 + s).data;
    const std::size_t lasso = lasso_network(data, 0.2, EdgeRule::and_rule).graph.edge_count();
    const std::size_t ols =
        nodewise_network(data, Selector::significance(0.01), EdgeRule::and_rule).graph.edge_count();
    not_denser += lasso <= ols;
    strictly_smaller += lasso < ols;
  }
  EXPECT_GT(2 * not_denser, seeds);
  EXPECT_GT(2 * strictly_smaller, seeds);
}

}  // namespace
}  // namespace lvnet
