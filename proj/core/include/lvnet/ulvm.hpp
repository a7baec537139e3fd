#pragma once

// Unidimensional latent variable model X_i = lambda_i * eta + e_i with
// eta ~ N(mu, 1), e_i ~ N(0, 1) independent. Monotonicity of the link is a
// modelling assumption only and has no computational content here.

#include <cstddef>
#include <span>
#include <vector>

#include "lvnet/matrix.hpp"

namespace lvnet {

struct UlvmParams {
  std::vector<double> loadings;
  double latent_mean = 0.0;
  double latent_var = 1.0;
  double error_var = 1.0;
};

class UlvmModel {
 public:
  explicit UlvmModel(std::vector<double> loadings, double latent_mean = 0.0);
  /// Rejects any latent or error variance other than 1.
  explicit UlvmModel(const UlvmParams& params);

  std::size_t dim() const noexcept { return loadings_.size(); }
  const std::vector<double>& loadings() const noexcept { return loadings_; }
  double latent_mean() const noexcept { return latent_mean_; }
  static constexpr double latent_var() noexcept { return 1.0; }
  static constexpr double error_var() noexcept { return 1.0; }

 private:
  std::vector<double> loadings_;
  double latent_mean_ = 0.0;
};

/// Closed-form network implied by a ULVM.
struct UlvmNetworkSummary {
  double alpha = 0.0;       // -1 / (lambda^T lambda + 1)
  SymMatrix edge_weights;   // alpha * lambda_i * lambda_j off the diagonal, 0 on it
  SymMatrix concentration;  // I + alpha * lambda lambda^T
};

/// lambda lambda^T + I.
SymMatrix ulvm_covariance(const UlvmModel& model);

/// Sherman-Morrison closed form; no numeric inversion is performed.
UlvmNetworkSummary ulvm_concentration(const UlvmModel& model);

struct LimitPoint {
  std::size_t p = 0;
  double max_offdiag = 0.0;
};

/// Largest |off-diagonal| of the concentration matrix for constant
/// loadings c at each requested size, which is c^2 / (p c^2 + 1).
/// Throws ZeroLoading for c == 0 and InvalidArgument for an empty list or
/// a size below 2.
///
/// Only the constant-loading case is covered. With general loadings the
/// off-diagonals still vanish whenever sum(lambda_i^2) diverges as p grows.
std::vector<LimitPoint> concentration_limit_profile(double loading,
                                                    std::span<const std::size_t> sizes);

}  // namespace lvnet
