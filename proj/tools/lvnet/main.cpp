#include <cstdio>
#include <exception>
#include <functional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lvnet/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code(lvnet::ErrorKind kind) {
  switch (kind) {
    case lvnet::ErrorKind::validation: return kExitValidation;
    case lvnet::ErrorKind::numeric: return kExitNumeric;
    case lvnet::ErrorKind::io: return kExitIo;
  }
  return kExitValidation;
}

void add_output(CLI::App* cmd, std::optional<std::string>& path) {
  cmd->add_option("-o,--output", path, "Output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lvnet::cli;

  CLI::App app{"Latent variable models, Gaussian graphical models and regression networks"};
  app.set_config("--config", "", "TOML config file; command-line flags take precedence");
  app.require_subcommand(1);

  std::function<void()> action;

  UlvmNetArgs ulvm;
  auto* ulvm_cmd = app.add_subcommand("ulvm-net", "Covariance, concentration and network of a ULVM");
  ulvm_cmd->add_option("--loadings", ulvm.loadings, "Comma-separated loadings")
      ->required()
      ->delimiter(',');
  ulvm_cmd->add_option("--mean", ulvm.latent_mean, "Latent mean");
  ulvm_cmd->add_option("--weights", ulvm.weights, "Edge weights")
      ->check(CLI::IsMember({"partial-covariance", "partial-correlation"}));
  ulvm_cmd->add_option("--out", ulvm.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  add_output(ulvm_cmd, ulvm.output);
  ulvm_cmd->callback([&] { action = [&] { run_ulvm_net(ulvm); }; });

  FitGgmArgs ggm;
  auto* ggm_cmd = app.add_subcommand("fit-ggm", "Estimate a network from data");
  ggm_cmd->add_option("--data", ggm.data, "CSV with a header row")->required();
  ggm_cmd->add_option("--method", ggm.method, "Estimator")
      ->check(CLI::IsMember({"invcov", "nodewise-ols", "nodewise-lasso"}));
  ggm_cmd->add_option("--rule", ggm.rule, "Edge rule for nodewise methods")
      ->check(CLI::IsMember({"and", "or"}));
  ggm_cmd->add_option("--select", ggm.select, "Nodewise OLS selection")
      ->check(CLI::IsMember({"significance", "magnitude"}));
  ggm_cmd->add_option("--alpha", ggm.alpha, "Significance level for nodewise OLS");
  ggm_cmd->add_flag("--bonferroni", ggm.bonferroni, "Divide alpha by the number of tests");
  ggm_cmd->add_option("--tol", ggm.tol, "Threshold on |theta_ij| (invcov) or |beta_ij| (magnitude)");
  ggm_cmd->add_option("--penalty", ggm.penalty, "Lasso penalty");
  ggm_cmd->add_option("--penalty-grid", ggm.penalty_grid, "Penalties scored on --validation")
      ->delimiter(',');
  ggm_cmd->add_option("--validation", ggm.validation, "Validation CSV for --penalty-grid");
  ggm_cmd->add_option("--max-iter", ggm.max_iter, "Lasso coordinate-descent sweeps");
  ggm_cmd->add_option("--lasso-tol", ggm.lasso_tol, "Lasso convergence tolerance");
  ggm_cmd->add_option("--threads", ggm.threads, "Worker threads (0: all cores)");
  ggm_cmd->add_option("--out", ggm.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  add_output(ggm_cmd, ggm.output);
  ggm_cmd->callback([&] { action = [&] { run_fit_ggm(ggm); }; });

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose-r2", "OLS fit with per-predictor R2 shares");
  dec_cmd->add_option("--data", dec.data, "CSV with a header row")->required();
  dec_cmd->add_option("--response", dec.response, "Response column")->required();
  dec_cmd->add_option("--predictors", dec.predictors, "Predictor columns (default: all others)")
      ->delimiter(',');
  dec_cmd->add_flag("--type1", dec.type1, "Also fit the type-I projected design");
  dec_cmd->add_option("--order", dec.order, "Projection order of the predictors")->delimiter(',');
  dec_cmd->add_option("--mode", dec.mode, "Intercept handling")
      ->check(CLI::IsMember({"centered", "intercept", "origin"}));
  dec_cmd->add_option("--out", dec.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  add_output(dec_cmd, dec.output);
  dec_cmd->callback([&] { action = [&] { run_decompose_r2(dec); }; });

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Draw a dataset");
  sim_cmd->add_option("--preset", sim.preset, "Generating model")
      ->check(CLI::IsMember({"table1", "ulvm", "covariance"}));
  sim_cmd->add_option("-n,--n", sim.n, "Number of rows");
  sim_cmd->add_option("--seed", sim.seed, "RNG seed");
  sim_cmd->add_option("--loadings", sim.loadings, "ULVM loadings")->delimiter(',');
  sim_cmd->add_option("--mean", sim.latent_mean, "ULVM latent mean");
  sim_cmd->add_option("--sigma", sim.sigma, "Covariance CSV for --preset covariance");
  sim_cmd->add_flag("--report", sim.report, "Print the standard and projected fits (table1)");
  sim_cmd->add_option("--out", sim.format, "Report format")->check(CLI::IsMember({"table", "json"}));
  add_output(sim_cmd, sim.output);
  sim_cmd->callback([&] { action = [&] { run_simulate(sim); }; });

  LimitProfileArgs lim;
  auto* lim_cmd = app.add_subcommand("limit-profile", "Largest |theta_ij| of a constant-loading ULVM by p");
  lim_cmd->add_option("--loading", lim.loading, "Common loading c");
  lim_cmd->add_option("--sizes", lim.sizes, "Comma-separated dimensions")->delimiter(',');
  lim_cmd->add_option("--out", lim.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  add_output(lim_cmd, lim.output);
  lim_cmd->callback([&] { action = [&] { run_limit_profile(lim); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    action();
  } catch (const lvnet::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return kExitOk;
}
