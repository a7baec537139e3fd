#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lvnet/errors.hpp"
#include "lvnet/ggm.hpp"
#include "lvnet/linalg.hpp"
#include "lvnet/ulvm.hpp"
#include "support/oracles.hpp"

namespace lvnet {
namespace {

TEST(UlvmModel, VariancesAreFixedAtOne) {
  EXPECT_NO_THROW(UlvmModel(UlvmParams{{1.0, 0.5}}));
  EXPECT_THROW(UlvmModel(UlvmParams{{1.0}, 0.0, 2.0, 1.0}), InvalidArgument);
  EXPECT_THROW(UlvmModel(UlvmParams{{1.0}, 0.0, 1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(UlvmModel(std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(UlvmModel(std::vector<double>{1.0, INFINITY}), InvalidArgument);
}

TEST(UlvmCovariance, WorkedExample) {
  const SymMatrix sigma = ulvm_covariance(UlvmModel({1, 0.5, 0.5}));
  EXPECT_EQ(sigma, (SymMatrix{{2, 0.5, 0.5}, {0.5, 1.25, 0.25}, {0.5, 0.25, 1.25}}));
}

TEST(UlvmCovariance, ZeroLoadingsGiveIdentity) {
  EXPECT_EQ(ulvm_covariance(UlvmModel({0, 0, 0})), SymMatrix::identity(3));
}

TEST(UlvmCovariance, OuterProductByHand) {
  EXPECT_EQ(ulvm_covariance(UlvmModel({1, 1})), (SymMatrix{{2, 1}, {1, 2}}));
}

TEST(UlvmConcentration, WorkedExample) {
  const UlvmNetworkSummary net = ulvm_concentration(UlvmModel({1, 0.5, 0.5}));
  const SymMatrix expected{{0.6, -0.2, -0.2}, {-0.2, 0.9, -0.1}, {-0.2, -0.1, 0.9}};
  EXPECT_LT(max_abs_diff(net.concentration, expected), 1e-12);
  EXPECT_EQ(net.alpha, -0.4);
  EXPECT_EQ(net.concentration(0, 1), -0.2);
  EXPECT_EQ(net.edge_weights(0, 1), -0.2);
  EXPECT_EQ(net.edge_weights(1, 2), -0.1);
  EXPECT_EQ(net.edge_weights(0, 0), 0.0);
}

TEST(UlvmConcentration, ZeroLoadingsGiveEmptyNetwork) {
  const UlvmNetworkSummary net = ulvm_concentration(UlvmModel({0, 0}));
  EXPECT_EQ(net.concentration, SymMatrix::identity(2));
  EXPECT_EQ(net.alpha, -1.0);
}

TEST(UlvmConcentration, TwoVariableMatchesNumericInverse) {
  const UlvmNetworkSummary net = ulvm_concentration(UlvmModel({1, 1}));
  EXPECT_NEAR(net.alpha, -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(net.concentration(0, 0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(net.concentration(0, 1), -1.0 / 3.0, 1e-15);
  EXPECT_LT(max_abs_diff(net.concentration, invert_pd(SymMatrix{{2, 1}, {1, 2}})), 1e-15);
}

TEST(UlvmConcentration, ShermanMorrisonAgreesWithNumericInversion) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(2, 50);
  std::uniform_real_distribution<double> load(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> l(dim(rng));
    for (auto& x : l) x = load(rng);
    const UlvmModel model(l);
    const UlvmNetworkSummary net = ulvm_concentration(model);
    const SymMatrix sigma = ulvm_covariance(model);
    EXPECT_LT(max_abs_diff(net.concentration, invert_pd(sigma)), 1e-9);
    EXPECT_LT(testing::max_abs_offdiag_minus_identity(net.concentration.matrix() * sigma.matrix()),
              1e-10);
    EXPECT_LT(net.alpha, 0.0);
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j)
        if (i != j) EXPECT_EQ(net.edge_weights(i, j), net.concentration(i, j));
  }
}

TEST(UlvmConcentration, ZeroEntryExactlyWhenALoadingIsZero) {
  const std::vector<double> l{1.3, 0.0, -0.7, 0.2};
  const UlvmNetworkSummary net = ulvm_concentration(UlvmModel(l));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (i == j) continue;
      const bool zero = net.concentration(i, j) == 0.0;
      EXPECT_EQ(zero, l[i] == 0.0 || l[j] == 0.0) << i << "," << j;
    }
}

TEST(UlvmConcentration, AllNonzeroLoadingsGiveCompleteGraph) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> load(0.05, 2.0);
  for (std::size_t p : {2u, 3u, 10u, 40u}) {
    std::vector<double> l(p);
    for (auto& x : l) x = (rng() % 2 ? 1 : -1) * load(rng);
    const Graph g = graph_from_concentration(ulvm_concentration(UlvmModel(l)).concentration);
    EXPECT_EQ(g.edge_count(), p * (p - 1) / 2);
  }
}

TEST(LimitProfile, ClosedFormValues) {
  const std::vector<std::size_t> sizes{4, 99};
  const auto profile = concentration_limit_profile(1.0, sizes);
  EXPECT_EQ(profile[0].max_offdiag, 0.2);
  EXPECT_EQ(profile[1].max_offdiag, 0.01);
}

TEST(LimitProfile, StrictlyDecreasingAndMatchesFormula) {
  for (double c : {1.0, 0.3, -2.5}) {
    std::vector<std::size_t> sizes;
    for (std::size_t p = 2; p <= 200; p += 7) sizes.push_back(p);
    const auto profile = concentration_limit_profile(c, sizes);
    for (std::size_t k = 0; k < profile.size(); ++k) {
      const double p = static_cast<double>(profile[k].p);
      EXPECT_NEAR(profile[k].max_offdiag, c * c / (p * c * c + 1.0), 1e-15);
      if (k > 0) EXPECT_LT(profile[k].max_offdiag, profile[k - 1].max_offdiag);
    }
  }
}

TEST(LimitProfile, Errors) {
  const std::vector<std::size_t> sizes{2, 4};
  EXPECT_THROW(concentration_limit_profile(0.0, sizes), ZeroLoading);
  EXPECT_THROW(concentration_limit_profile(1.0, {}), InvalidArgument);
  const std::vector<std::size_t> bad{1, 4};
  EXPECT_THROW(concentration_limit_profile(1.0, bad), InvalidArgument);
}

}  // namespace
}  // namespace lvnet
