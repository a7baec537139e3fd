#include "lvnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lvnet/errors.hpp"

namespace lvnet {

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::partial_covariance:
      return "partial_covariance";
    case WeightKind::partial_correlation:
      return "partial_correlation";
    case WeightKind::regression_coefficient:
      return "regression_coefficient";
  }
  return "unknown";
}

std::string_view to_string(EdgeRule rule) {
  return rule == EdgeRule::and_rule ? "and" : "or";
}

Graph::Graph(std::size_t num_nodes, WeightKind kind) : num_nodes_(num_nodes), kind_(kind) {}

namespace {

auto edge_less = [](const Edge& e, std::pair<std::size_t, std::size_t> key) {
  return std::pair(e.i, e.j) < key;
};

}  // namespace

void Graph::add_edge(std::size_t a, std::size_t b, double weight) {
  if (a == b) throw InvalidArgument("self-loop on node " + std::to_string(a + 1));
  if (a >= num_nodes_ || b >= num_nodes_) throw InvalidArgument("edge endpoint out of range");
  if (!std::isfinite(weight) || weight == 0.0)
    throw InvalidArgument("edge weight must be finite and nonzero");
  const auto key = std::minmax(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, edge_less);
  if (it != edges_.end() && it->i == key.first && it->j == key.second) {
    it->weight = weight;
    return;
  }
  edges_.insert(it, Edge{key.first, key.second, weight});
}

std::optional<double> Graph::weight(std::size_t a, std::size_t b) const {
  const auto key = std::minmax(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, edge_less);
  if (it != edges_.end() && it->i == key.first && it->j == key.second) return it->weight;
  return std::nullopt;
}

bool Graph::has_edge(std::size_t a, std::size_t b) const { return weight(a, b).has_value(); }

bool Graph::same_edges(const Graph& other) const {
  if (num_nodes_ != other.num_nodes_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].i != other.edges_[k].i || edges_[k].j != other.edges_[k].j) return false;
  return true;
}

bool Graph::edges_subset_of(const Graph& other) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return other.has_edge(e.i, e.j); });
}

Graph chain_graph(std::size_t p) {
  Graph g(p);
  for (std::size_t i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1, 1.0);
  return g;
}

}  // namespace lvnet
