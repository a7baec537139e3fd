#include "commands.hpp"

#include <cstdio>
#include <iostream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "lvnet/csv.hpp"
#include "lvnet/dot.hpp"
#include "lvnet/errors.hpp"
#include "lvnet/ggm.hpp"
#include "lvnet/lasso.hpp"
#include "lvnet/linalg.hpp"
#include "lvnet/nodewise.hpp"
#include "lvnet/regress.hpp"
#include "lvnet/serialize.hpp"
#include "lvnet/sim.hpp"
#include "lvnet/ulvm.hpp"
#include "output.hpp"

namespace lvnet::cli {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

EdgeRule parse_rule(const std::string& rule) {
  return rule == "or" ? EdgeRule::or_rule : EdgeRule::and_rule;
}

FitMode parse_mode(const std::string& mode) {
  if (mode == "intercept") return FitMode::intercept;
  if (mode == "origin") return FitMode::origin;
  return FitMode::centered;
}

std::string fit_table(const RegressionFit& fit, const std::string& title) {
  std::string out = title + ": " + fit.response + " ~ ";
  for (std::size_t k = 0; k < fit.predictors.size(); ++k)
    out += (k ? " + " : "") + fit.predictors[k];
  out += "  (" + std::string(to_string(fit.mode)) + ")\n";
  char buf[200];
  std::snprintf(buf, sizeof buf, "  %-10s %12s %12s %12s %12s %12s\n", "term", "estimate", "std.error",
                "t", "cov(x,y)", "R2 share");
  out += buf;
  for (std::size_t k = 0; k < fit.predictors.size(); ++k) {
    std::snprintf(buf, sizeof buf, "  %-10s %12.6g %12.6g %12.6g %12.6g %12.6g\n",
                  fit.predictors[k].c_str(), fit.coefficients[k], fit.std_errors[k],
                  fit.t_statistics[k], fit.covariances[k], fit.contributions[k]);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "  var(y) %.6g  R2 %.6g  dof %zu\n", fit.response_variance,
                fit.r_squared, fit.dof);
  out += buf;
  return out;
}

std::string graph_output(const Graph& g, const std::vector<std::string>& names,
                         const std::string& format, json extra) {
  if (format == "dot") return to_dot(g, names);
  if (format == "table") return edge_table(g, names);
  extra["graph"] = graph_json(g, names);
  return dump(extra);
}

}  // namespace

void run_ulvm_net(const UlvmNetArgs& args) {
  const UlvmModel model(args.loadings, args.latent_mean);
  const SymMatrix sigma = ulvm_covariance(model);
  const UlvmNetworkSummary summary = ulvm_concentration(model);
  const PartialCorrMatrix rho = partial_correlations(summary.concentration);
  const WeightKind kind = args.weights == "partial-correlation" ? WeightKind::partial_correlation
                                                                 : WeightKind::partial_covariance;
  const Graph g = graph_from_concentration(summary.concentration, kDefaultEdgeTolerance, kind);
  const auto names = default_names(model.dim());

  if (args.format == "json") {
    json j = summary;
    j["loadings"] = model.loadings();
    j["covariance"] = sigma;
    j["partial_correlations"] = rho;
    j["graph"] = graph_json(g, names);
    emit(dump(j), args.output);
  } else if (args.format == "dot") {
    emit(to_dot(g), args.output);
  } else {
    std::string out = "alpha " + format_number(summary.alpha) + "\n\ncovariance\n" +
                      matrix_table(sigma.matrix(), names) + "\nconcentration\n" +
                      matrix_table(summary.concentration.matrix(), names) +
                      "\npartial correlations\n" + matrix_table(rho.matrix().matrix(), names) + "\n" +
                      edge_table(g, names);
    emit(out, args.output);
  }
}

void run_fit_ggm(const FitGgmArgs& args) {
  const DataMatrix data = load_csv(args.data);
  const auto& names = data.col_names();
  const EdgeRule rule = parse_rule(args.rule);
  json extra{{"method", args.method}, {"variables", names}};

  if (args.method == "invcov") {
    const SymMatrix theta = invert_pd(sample_covariance(data));
    const Graph g = graph_from_concentration(theta, args.tol, WeightKind::partial_correlation);
    extra["tol"] = args.tol;
    extra["concentration"] = theta;
    extra["partial_correlations"] = partial_correlations(theta);
    emit(graph_output(g, names, args.format, extra), args.output);
    return;
  }

  extra["rule"] = to_string(rule);
  if (args.method == "nodewise-ols") {
    const Selector selector = args.select == "magnitude"
                                  ? Selector::magnitude(args.tol)
                                  : Selector::significance(args.alpha, args.bonferroni);
    const NodewiseResult res =
        nodewise_network(data, selector, rule, NodewiseOptions{FitMode::centered, args.threads});
    extra["selector"] = selector;
    extra["fits"] = res.fits;
    emit(graph_output(res.graph, names, args.format, extra), args.output);
    return;
  }

  const LassoNetworkOptions opts{args.max_iter, args.lasso_tol, args.threads};
  double penalty = args.penalty;
  if (!args.penalty_grid.empty()) {
    if (!args.validation)
      throw InvalidArgument("--penalty-grid needs --validation data to score the grid");
    const DataMatrix valid = load_csv(*args.validation);
    if (valid.col_names() != names)
      throw InvalidArgument("validation columns do not match the training columns");
    const PenaltySelection sel = select_penalty_by_validation(data, valid, args.penalty_grid, opts);
    penalty = sel.penalty;
    extra["penalty_grid"] = sel.grid;
    extra["validation_error"] = sel.validation_error;
  }
  const LassoNetworkResult res = lasso_network(data, penalty, rule, opts);
  extra["penalty"] = penalty;
  extra["fits"] = res.fits;
  emit(graph_output(res.graph, names, args.format, extra), args.output);
}

void run_decompose_r2(const DecomposeArgs& args) {
  const DataMatrix data = load_csv(args.data);
  const std::size_t response = data.index_of(args.response);
  std::vector<std::size_t> cols;
  if (args.predictors.empty()) {
    for (std::size_t j = 0; j < data.n_cols(); ++j)
      if (j != response) cols.push_back(j);
  } else {
    for (const auto& name : args.predictors) {
      const std::size_t j = data.index_of(name);
      if (j == response) throw InvalidArgument("response '" + name + "' listed as a predictor");
      cols.push_back(j);
    }
  }
  const DataMatrix X = data.select(cols);
  const std::vector<double> y = data.column(response);
  const FitOptions options{parse_mode(args.mode)};
  const RegressionFit standard = ols_fit(X, y, options, args.response);

  json j{{"standard", standard}};
  std::string text = fit_table(standard, "standard");
  if (args.type1) {
    std::vector<std::size_t> order(X.n_cols());
    if (args.order.empty()) {
      std::iota(order.begin(), order.end(), std::size_t{0});
    } else {
      if (args.order.size() != X.n_cols())
        throw InvalidArgument("--order must list every predictor exactly once");
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = X.index_of(args.order[k]);
    }
    const ProjectedDesign design = type1_project(X, order);
    const RegressionFit projected = ols_fit(design.columns, y, options, args.response);
    j["type1"] = projected;
    j["gram_offdiag_max"] = design.gram_offdiag_max;
    text += "\n" + fit_table(projected, "type-I projected");
  }
  emit(args.format == "table" ? text : dump(j), args.output);
}

void run_simulate(const SimulateArgs& args) {
  if (args.report) {
    if (args.preset != "table1") throw InvalidArgument("--report is only available for --preset table1");
    const ExperimentReport report = run_table1(args.n, args.seed);
    if (args.output) save_csv(*args.output, table1_dataset(args.n, args.seed));
    emit(args.format == "json" ? dump(json(report)) : format_table1(report), std::nullopt);
    return;
  }
  SimSpec spec{Table1Preset{}, args.n, args.seed};
  if (args.preset == "ulvm") {
    if (args.loadings.empty()) throw InvalidArgument("--preset ulvm needs --loadings");
    spec.kind = UlvmModel(args.loadings, args.latent_mean);
  } else if (args.preset == "covariance") {
    if (!args.sigma) throw InvalidArgument("--preset covariance needs --sigma");
    spec.kind = load_sym_matrix_csv(*args.sigma);
  }
  const DataMatrix data = simulate(spec);
  if (args.output) {
    save_csv(*args.output, data);
  } else {
    write_csv(std::cout, data);
  }
}

void run_limit_profile(const LimitProfileArgs& args) {
  const std::vector<LimitPoint> profile = concentration_limit_profile(args.loading, args.sizes);
  if (args.format == "json") {
    emit(dump(json{{"loading", args.loading}, {"profile", profile}}), args.output);
    return;
  }
  std::string out = args.format == "csv" ? "p,max_offdiag\n" : "       p   max |theta_ij|\n";
  char buf[64];
  for (const LimitPoint& pt : profile) {
    if (args.format == "csv")
      std::snprintf(buf, sizeof buf, "%zu,%.17g\n", pt.p, pt.max_offdiag);
    else
      std::snprintf(buf, sizeof buf, "%8zu   %.6g\n", pt.p, pt.max_offdiag);
    out += buf;
  }
  emit(out, args.output);
}

}  // namespace lvnet::cli
