#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lvnet/errors.hpp"
#include "lvnet/ggm.hpp"
#include "lvnet/linalg.hpp"
#include "lvnet/nodewise.hpp"
#include "lvnet/sim.hpp"
#include "lvnet/ulvm.hpp"
#include "support/oracles.hpp"

namespace lvnet {
namespace {

// beta_ij = -(S^{-1})_ij / (S^{-1})_ii holds exactly for sample moments.
TEST(Nodewise, CoefficientsMatchInverseSampleCovariance) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t p = 3 + trial % 8;
    const DataMatrix data(testing::random_data(200, p, rng));
    const NodewiseResult res = nodewise_network(data, Selector::magnitude(0.0), EdgeRule::and_rule);
    const SymMatrix prec = invert_pd(sample_covariance(data));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        if (i != j) EXPECT_NEAR(res.coefficients(i, j), -prec(i, j) / prec(i, i), 1e-8);
  }
}

TEST(Nodewise, EdgeWeightsAreSamplePartialCorrelations) {
  std::mt19937_64 rng(42);
  const DataMatrix data(testing::random_data(150, 5, rng));
  const NodewiseResult res = nodewise_network(data, Selector::magnitude(0.0), EdgeRule::or_rule);
  const PartialCorrMatrix rho = partial_correlations(invert_pd(sample_covariance(data)));
  ASSERT_TRUE(res.graph.is_complete());
  for (const Edge& e : res.graph.edges()) EXPECT_NEAR(e.weight, rho(e.i, e.j), 1e-10);
}

TEST(Nodewise, UlvmSampleGivesCompleteGraph) {
  const DataMatrix data = sample_ulvm(UlvmModel({1, 0.5, 0.5}), 10000, 5).data;
  const NodewiseResult res =
      nodewise_network(data, Selector::significance(0.01), EdgeRule::and_rule);
  EXPECT_TRUE(res.graph.is_complete());
}

TEST(Nodewise, ChainModelRecoversChain) {
  const SymMatrix theta = chain_concentration(5, -0.4);
  // Population check: only the chain entries of Theta are nonzero.
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 2; j < 5; ++j) ASSERT_EQ(theta(i, j), 0.0);
  const DataMatrix data = sample_covariance_model(invert_pd(theta), 10000, 17);
  const NodewiseResult res =
      nodewise_network(data, Selector::significance(0.01), EdgeRule::and_rule);
  EXPECT_TRUE(res.graph.same_edges(chain_graph(5)));
}

TEST(Nodewise, IndependentColumnsRarelyProduceEdges) {
  // Under the null each pair is a false positive with probability ~alpha.
  std::size_t false_edges = 0;
  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DataMatrix data = sample_covariance_model(SymMatrix::identity(5), 300, seed);
    false_edges +=
        nodewise_network(data, Selector::significance(0.01), EdgeRule::and_rule).graph.edge_count();
    pairs += 10;
  }
  EXPECT_LE(static_cast<double>(false_edges) / static_cast<double>(pairs), 0.03);
}

TEST(Nodewise, AndRuleIsSubsetOfOrRule) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DataMatrix data = sample_ulvm(UlvmModel({0.3, 0.2, 0.5, 0.1, 0.25}), 150, seed).data;
    for (Selector sel : {Selector::significance(0.05), Selector::magnitude(0.1)}) {
      const Graph g_and = nodewise_network(data, sel, EdgeRule::and_rule).graph;
      const Graph g_or = nodewise_network(data, sel, EdgeRule::or_rule).graph;
      EXPECT_TRUE(g_and.edges_subset_of(g_or));
    }
  }
}

TEST(Nodewise, ThreadedRunIsIdentical) {
  const DataMatrix data = sample_ulvm(UlvmModel(std::vector<double>(8, 0.7)), 400, 3).data;
  const NodewiseResult serial =
      nodewise_network(data, Selector::significance(0.05), EdgeRule::or_rule);
  const NodewiseResult threaded = nodewise_network(data, Selector::significance(0.05),
                                                   EdgeRule::or_rule, NodewiseOptions{{}, 4});
  EXPECT_EQ(serial.graph, threaded.graph);
  EXPECT_EQ(serial.coefficients, threaded.coefficients);
}

TEST(Nodewise, BonferroniIsMoreConservative) {
  const DataMatrix data = sample_ulvm(UlvmModel(std::vector<double>(6, 0.5)), 300, 8).data;
  const Graph plain = nodewise_network(data, Selector::significance(0.05), EdgeRule::or_rule).graph;
  const Graph bonf =
      nodewise_network(data, Selector::significance(0.05, true), EdgeRule::or_rule).graph;
  EXPECT_TRUE(bonf.edges_subset_of(plain));
}

TEST(Nodewise, Errors) {
  EXPECT_THROW(Selector::significance(0.0), InvalidArgument);
  EXPECT_THROW(Selector::magnitude(-1.0), InvalidArgument);
  const DataMatrix tiny(Matrix{{1, 2, 3}, {2, 1, 0}, {0, 0, 1}});
  EXPECT_THROW(nodewise_network(tiny, Selector::significance(0.05), EdgeRule::and_rule),
               TooFewRows);
}

}  // namespace
}  // namespace lvnet
