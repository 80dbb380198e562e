#include "stg/graph.hpp"

#include <bit>
#include <string>

#include "stg/errors.hpp"

namespace stg {

StaticGraph::StaticGraph(std::size_t n, bool directed) : directed_(directed), adjacency_(n) {}

StaticGraph::StaticGraph(std::size_t n, bool directed, std::span<const Edge> edges)
    : StaticGraph(n, directed) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

EdgeId StaticGraph::add_edge(VertexId u, VertexId v) {
  const std::size_t n = vertex_count();
  if (u >= n || v >= n) {
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
  }
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (find_edge(u, v)) {
    throw PreconditionError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  const EdgeId id = edges_.size();
  edges_.push_back({u, v});
  adjacency_[u].push_back({id, v});
  if (!directed_) adjacency_[v].push_back({id, u});
  return id;
}

std::optional<EdgeId> StaticGraph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.other == v) return inc.edge;
  }
  return std::nullopt;
}

EdgeSet::EdgeSet(std::size_t edge_count) : size_(edge_count), words_((edge_count + 63) / 64, 0) {}

EdgeSet EdgeSet::from_mask(std::size_t edge_count, std::uint64_t mask) {
  EdgeSet set(edge_count);
  if (edge_count == 0) return set;
  if (edge_count < 64) mask &= (std::uint64_t{1} << edge_count) - 1;
  set.words_[0] = mask;
  return set;
}

std::size_t EdgeSet::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<EdgeId> EdgeSet::members() const {
  std::vector<EdgeId> out;
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (other.size_ != size_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

}  // namespace stg
