#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lvnet {

/// What the weight attached to an edge measures.
enum class WeightKind { partial_covariance, partial_correlation, regression_coefficient };

std::string_view to_string(WeightKind kind);

/// Nodewise results are symmetrised by requiring both directions (and) or
/// either direction (or).
enum class EdgeRule { and_rule, or_rule };

std::string_view to_string(EdgeRule rule);

struct Edge {
  std::size_t i = 0;  // 0-based, i < j
  std::size_t j = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph on nodes 0..p-1 (printed as 1..p). Edges are
/// kept sorted by (i, j) without duplicates or self-loops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_nodes, WeightKind kind = WeightKind::partial_covariance);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  WeightKind weight_kind() const noexcept { return kind_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Inserts or overwrites the edge {a, b}. Throws InvalidArgument on a
  /// self-loop, an out-of-range node or a zero/non-finite weight.
  void add_edge(std::size_t a, std::size_t b, double weight);
  bool has_edge(std::size_t a, std::size_t b) const;
  std::optional<double> weight(std::size_t a, std::size_t b) const;

  bool is_complete() const noexcept {
    return edges_.size() == num_nodes_ * (num_nodes_ - (num_nodes_ > 0 ? 1 : 0)) / 2;
  }
  /// Same node count and same unordered pairs, weights ignored.
  bool same_edges(const Graph& other) const;
  /// Every edge of this graph is also in `other`.
  bool edges_subset_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  WeightKind kind_ = WeightKind::partial_covariance;
  std::vector<Edge> edges_;
};

/// Chain graph 1-2-...-p with unit weights; handy as a reference structure.
Graph chain_graph(std::size_t p);

}  // namespace lvnet
