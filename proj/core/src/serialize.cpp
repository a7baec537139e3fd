#include "lvnet/serialize.hpp"

namespace lvnet {

using nlohmann::json;

void to_json(json& j, const Matrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    j.push_back(std::vector<double>(row.begin(), row.end()));
  }
}

void to_json(json& j, const SymMatrix& m) { to_json(j, m.matrix()); }

void to_json(json& j, const PartialCorrMatrix& m) { to_json(j, m.matrix()); }

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"from", e.i + 1}, {"to", e.j + 1}, {"weight", e.weight}});
  j = {{"nodes", g.num_nodes()},
       {"weight_kind", to_string(g.weight_kind())},
       {"edge_count", g.edge_count()},
       {"edges", std::move(edges)}};
}

json graph_json(const Graph& g, const std::vector<std::string>& names) {
  json j = g;
  if (!names.empty()) j["node_names"] = names;
  return j;
}

void to_json(json& j, const RegressionFit& fit) {
  j = {{"response", fit.response},
       {"predictors", fit.predictors},
       {"mode", to_string(fit.mode)},
       {"coefficients", fit.coefficients},
       {"std_errors", fit.std_errors},
       {"t_statistics", fit.t_statistics},
       {"dof", fit.dof},
       {"residual_variance", fit.residual_variance},
       {"r_squared", fit.r_squared},
       {"contributions", fit.contributions},
       {"covariances", fit.covariances},
       {"response_variance", fit.response_variance}};
  if (fit.mode == FitMode::intercept) j["intercept"] = fit.intercept;
}

void to_json(json& j, const LassoFit& fit) {
  j = {{"response", fit.response},
       {"predictors", fit.predictors},
       {"coefficients", fit.coefficients},
       {"intercept", fit.intercept},
       {"penalty", fit.penalty},
       {"iterations", fit.iterations},
       {"converged", fit.converged},
       {"kkt_violation", fit.kkt_violation}};
}

void to_json(json& j, const UlvmNetworkSummary& s) {
  j = {{"alpha", s.alpha}, {"edge_weights", s.edge_weights}, {"concentration", s.concentration}};
}

void to_json(json& j, const LimitPoint& pt) {
  j = {{"p", pt.p}, {"max_offdiag", pt.max_offdiag}};
}

void to_json(json& j, const Table1Covariances& c) {
  j = {{"x1_y", c.x1_y},   {"x2_y", c.x2_y},     {"x2p_y", c.x2p_y},
       {"x1_x2", c.x1_x2}, {"x1_x2p", c.x1_x2p}, {"var_y", c.var_y}};
}

void to_json(json& j, const ExperimentReport& r) {
  j = {{"n", r.n},
       {"seed", r.seed},
       {"standard_fit", r.standard_fit},
       {"projected_fit", r.projected_fit},
       {"covariances", r.covariances}};
}

void to_json(json& j, const Selector& s) {
  if (s.kind == Selector::Kind::magnitude) {
    j = {{"kind", "magnitude"}, {"tol", s.threshold}};
  } else {
    j = {{"kind", "significance"}, {"alpha", s.threshold}, {"bonferroni", s.bonferroni}};
  }
}

}  // namespace lvnet
