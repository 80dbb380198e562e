#include "stg/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "stg/errors.hpp"

namespace stg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WeightedGraph::WeightedGraph(const StaticGraph& graph, std::span<const double> probabilities)
    : graph_(&graph), weights_(graph.edge_count(), kInf) {
  if (probabilities.size() != graph.edge_count()) {
    throw PreconditionError("weighted graph needs one probability per edge");
  }
  for (EdgeId e = 0; e < weights_.size(); ++e) {
    const double p = probabilities[e];
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability outside [0,1]");
    if (p > 0.0) weights_[e] = 1.0 / p;
  }
}

WeightedGraph::WeightedGraph(const StaticGraph& graph, std::span<const Probability> probabilities)
    : graph_(&graph), weights_(graph.edge_count(), kInf) {
  if (probabilities.size() != graph.edge_count()) {
    throw PreconditionError("weighted graph needs one probability per edge");
  }
  for (EdgeId e = 0; e < weights_.size(); ++e) {
    const Probability& p = probabilities[e];
    if (!p.is_zero()) {
      weights_[e] = static_cast<double>(p.denominator()) / static_cast<double>(p.numerator());
    }
  }
}

bool WeightedGraph::excluded(EdgeId e) const { return std::isinf(weights_.at(e)); }

WeightedPath min_weight_path(const WeightedGraph& g, VertexId s, VertexId y) {
  const StaticGraph& graph = g.graph();
  const std::size_t n = graph.vertex_count();
  if (s >= n || y >= n) throw PreconditionError("terminal outside the vertex range");

  std::vector<double> dist(n, kInf);
  std::vector<VertexId> pred(n, n);
  std::vector<bool> settled(n, false);
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[s] = 0.0;
  heap.push({0.0, s});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    if (u == y) break;
    for (const Incidence& inc : graph.incident(u)) {
      const double w = g.weight(inc.edge);
      if (std::isinf(w) || settled[inc.other]) continue;
      const double cand = d + w;
      if (cand < dist[inc.other] || (cand == dist[inc.other] && u < pred[inc.other])) {
        dist[inc.other] = cand;
        pred[inc.other] = u;
        heap.push({cand, inc.other});
      }
    }
  }
  if (std::isinf(dist[y])) {
    throw NoPathError("no path from " + std::to_string(s) + " to " + std::to_string(y));
  }
  WeightedPath path;
  path.weight = dist[y];
  for (VertexId v = y; v != s; v = pred[v]) path.vertices.push_back(v);
  path.vertices.push_back(s);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

}  // namespace stg
