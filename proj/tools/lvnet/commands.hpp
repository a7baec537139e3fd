#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lvnet::cli {

struct UlvmNetArgs {
  std::vector<double> loadings;
  double latent_mean = 0.0;
  std::string weights = "partial-covariance";
  std::string format = "json";
  std::optional<std::string> output;
};

struct FitGgmArgs {
  std::string data;
  std::string method = "invcov";
  std::string rule = "and";
  std::string select = "significance";
  double alpha = 0.01;
  bool bonferroni = false;
  double tol = 0.05;
  double penalty = 0.1;
  std::vector<double> penalty_grid;
  std::optional<std::string> validation;
  std::size_t max_iter = 10000;
  double lasso_tol = 1e-8;
  unsigned threads = 1;
  std::string format = "json";
  std::optional<std::string> output;
};

struct DecomposeArgs {
  std::string data;
  std::string response;
  std::vector<std::string> predictors;
  bool type1 = false;
  std::vector<std::string> order;
  std::string mode = "centered";
  std::string format = "json";
  std::optional<std::string> output;
};

struct SimulateArgs {
  std::string preset = "table1";
  std::size_t n = 100;
  std::uint64_t seed = 1;
  std::vector<double> loadings;
  double latent_mean = 0.0;
  std::optional<std::string> sigma;
  std::optional<std::string> output;
  bool report = false;
  std::string format = "table";
};

struct LimitProfileArgs {
  double loading = 1.0;
  std::vector<std::size_t> sizes{2, 5, 10, 20, 50, 100};
  std::string format = "table";
  std::optional<std::string> output;
};

void run_ulvm_net(const UlvmNetArgs& args);
void run_fit_ggm(const FitGgmArgs& args);
void run_decompose_r2(const DecomposeArgs& args);
void run_simulate(const SimulateArgs& args);
void run_limit_profile(const LimitProfileArgs& args);

}  // namespace lvnet::cli
