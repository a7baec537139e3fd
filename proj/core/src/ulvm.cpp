#include "lvnet/ulvm.hpp"

#include <cmath>
#include <string>

#include "lvnet/errors.hpp"

namespace lvnet {

namespace {

void validate_loadings(const std::vector<double>& loadings) {
  if (loadings.empty()) throw InvalidArgument("ULVM needs at least one loading");
  for (double l : loadings)
    if (!std::isfinite(l)) throw InvalidArgument("ULVM loadings must be finite");
}

}  // namespace

UlvmModel::UlvmModel(std::vector<double> loadings, double latent_mean)
    : loadings_(std::move(loadings)), latent_mean_(latent_mean) {
  validate_loadings(loadings_);
  if (!std::isfinite(latent_mean_)) throw InvalidArgument("ULVM latent mean must be finite");
}

UlvmModel::UlvmModel(const UlvmParams& params) : UlvmModel(params.loadings, params.latent_mean) {
  if (params.latent_var != 1.0)
    throw InvalidArgument("ULVM latent variance is fixed at 1, got " +
                          std::to_string(params.latent_var));
  if (params.error_var != 1.0)
    throw InvalidArgument("ULVM error variance is fixed at 1, got " +
                          std::to_string(params.error_var));
}

SymMatrix ulvm_covariance(const UlvmModel& model) {
  const auto& l = model.loadings();
  const std::size_t p = l.size();
  SymMatrix sigma(p);
  for (std::size_t i = 0; i < p; ++i) {
    sigma.set(i, i, l[i] * l[i] + 1.0);
    for (std::size_t j = 0; j < i; ++j) sigma.set(i, j, l[i] * l[j]);
  }
  return sigma;
}

UlvmNetworkSummary ulvm_concentration(const UlvmModel& model) {
  const auto& l = model.loadings();
  const std::size_t p = l.size();
  double norm2 = 0.0;
  for (double x : l) norm2 += x * x;

  UlvmNetworkSummary out;
  out.alpha = -1.0 / (norm2 + 1.0);
  out.concentration = SymMatrix(p);
  out.edge_weights = SymMatrix(p);
  for (std::size_t i = 0; i < p; ++i) {
    out.concentration.set(i, i, 1.0 + out.alpha * l[i] * l[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const double w = out.alpha * l[i] * l[j];
      out.concentration.set(i, j, w);
      out.edge_weights.set(i, j, w);
    }
  }
  return out;
}

std::vector<LimitPoint> concentration_limit_profile(double loading,
                                                    std::span<const std::size_t> sizes) {
  if (loading == 0.0) throw ZeroLoading("the limit profile is vacuous for c = 0");
  if (!std::isfinite(loading)) throw InvalidArgument("loading must be finite");
  if (sizes.empty()) throw InvalidArgument("limit profile needs at least one size");

  std::vector<LimitPoint> out;
  out.reserve(sizes.size());
  for (std::size_t p : sizes) {
    if (p < 2) throw InvalidArgument("limit profile sizes must be >= 2, got " + std::to_string(p));
    const UlvmNetworkSummary net = ulvm_concentration(UlvmModel(std::vector<double>(p, loading)));
    double worst = 0.0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < i; ++j)
        worst = std::max(worst, std::abs(net.concentration(i, j)));
    out.push_back({p, worst});
  }
  return out;
}

}  // namespace lvnet
