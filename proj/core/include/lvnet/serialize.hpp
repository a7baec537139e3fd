#pragma once

// nlohmann::json conversions for the result types.

#include <nlohmann/json.hpp>

#include "lvnet/ggm.hpp"
#include "lvnet/graph.hpp"
#include "lvnet/lasso.hpp"
#include "lvnet/matrix.hpp"
#include "lvnet/nodewise.hpp"
#include "lvnet/regress.hpp"
#include "lvnet/sim.hpp"
#include "lvnet/ulvm.hpp"

namespace lvnet {

void to_json(nlohmann::json& j, const Matrix& m);
void to_json(nlohmann::json& j, const SymMatrix& m);
void to_json(nlohmann::json& j, const PartialCorrMatrix& m);
void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const RegressionFit& fit);
void to_json(nlohmann::json& j, const LassoFit& fit);
void to_json(nlohmann::json& j, const UlvmNetworkSummary& s);
void to_json(nlohmann::json& j, const LimitPoint& pt);
void to_json(nlohmann::json& j, const Table1Covariances& c);
void to_json(nlohmann::json& j, const ExperimentReport& r);
void to_json(nlohmann::json& j, const Selector& s);

/// Graph with node names attached.
nlohmann::json graph_json(const Graph& g, const std::vector<std::string>& names);

}  // namespace lvnet
