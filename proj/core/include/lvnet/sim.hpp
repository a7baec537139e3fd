#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lvnet/data_matrix.hpp"
#include "lvnet/matrix.hpp"
#include "lvnet/regress.hpp"
#include "lvnet/ulvm.hpp"

namespace lvnet {

struct UlvmSample {
  DataMatrix data;
  std::vector<double> latent;  // eta for each row
};

/// Row by row: eta ~ N(mu, 1), then X_i = lambda_i eta + e_i.
UlvmSample sample_ulvm(const UlvmModel& model, std::size_t n, std::uint64_t seed);

/// Rows Sigma^{1/2} z with z standard normal. Throws NotPositiveDefinite
/// unless sigma is positive definite.
DataMatrix sample_covariance_model(const SymMatrix& sigma, std::size_t n,
                                   std::uint64_t seed,
                                   std::vector<std::string> names = {});

/// Tridiagonal concentration: `diagonal` on the diagonal, `offdiag` next to it.
SymMatrix chain_concentration(std::size_t p, double offdiag, double diagonal = 1.0);

/// Three-variable design: x1 ~ N(0,1), x2 = 0.2 x1 + e2, y = x1 + 2 x2 + e.
/// Draw order: all of e, then x1, then e2.
struct Table1Design {
  static constexpr double beta1 = 1.0;
  static constexpr double beta2 = 2.0;
  static constexpr double x2_on_x1 = 0.2;
  /// var(y_hat) / var(y) = 5.96 / 6.96 in the population.
  static constexpr double population_r_squared = 5.96 / 6.96;
};

/// Columns x1, x2, y.
DataMatrix table1_dataset(std::size_t n, std::uint64_t seed);

struct Table1Covariances {
  double x1_y = 0.0;
  double x2_y = 0.0;
  double x2p_y = 0.0;
  double x1_x2 = 0.0;
  double x1_x2p = 0.0;
  double var_y = 0.0;
};

struct ExperimentReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  RegressionFit standard_fit;   // y on (x1, x2)
  RegressionFit projected_fit;  // y on (x1, x2p)
  Table1Covariances covariances;
};

/// Standard and type-I projected fits of the three-variable design.
/// Throws InvalidArgument for n < 10.
ExperimentReport run_table1(std::size_t n, std::uint64_t seed);

/// Plain-text table laid out like the classic two-panel regression output.
std::string format_table1(const ExperimentReport& report);

struct Table1Preset {};

/// What to simulate: the Table-1 design, a ULVM or a Gaussian with given
/// covariance.
struct SimSpec {
  std::variant<Table1Preset, UlvmModel, SymMatrix> kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Dispatches on `spec.kind`. Throws InvalidArgument for n < 2.
DataMatrix simulate(const SimSpec& spec);

}  // namespace lvnet
