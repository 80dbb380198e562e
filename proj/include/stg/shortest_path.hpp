#pragma once

#include <span>
#include <vector>

#include "stg/graph.hpp"
#include "stg/probability.hpp"

namespace stg {

/// Static graph with edge weights w(e) = 1/p_e (expected days to cross e).
/// Edges with p_e = 0 are excluded.
class WeightedGraph {
 public:
  WeightedGraph(const StaticGraph& graph, std::span<const double> probabilities);
  WeightedGraph(const StaticGraph& graph, std::span<const Probability> probabilities);

  const StaticGraph& graph() const noexcept { return *graph_; }
  /// Weight of edge e, or +inf when excluded.
  double weight(EdgeId e) const { return weights_.at(e); }
  bool excluded(EdgeId e) const;

 private:
  const StaticGraph* graph_;
  std::vector<double> weights_;
};

struct WeightedPath {
  double weight = 0.0;
  std::vector<VertexId> vertices;  // s ... y
};

/// Label-setting shortest path (binary heap). Ties between equal-weight
/// predecessors go to the lowest vertex id. Throws NoPathError when y is
/// unreachable.
WeightedPath min_weight_path(const WeightedGraph& g, VertexId s, VertexId y);

}  // namespace stg
