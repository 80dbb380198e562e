#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace stg {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the edge and the vertex it leads to.
struct Incidence {
  EdgeId edge;
  VertexId other;
};

/// Underlying static graph G = (V, E).
///
/// Vertex ids are 0..n-1, edge ids 0..m-1 in insertion order. Simple graphs
/// only: no self-loops, no duplicate edges (unordered pairs when
/// undirected, ordered pairs when directed). For a directed graph the
/// adjacency lists hold outgoing edges.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::size_t n, bool directed);
  StaticGraph(std::size_t n, bool directed, std::span<const Edge> edges);

  /// Throws PreconditionError on a self-loop, duplicate or dangling endpoint.
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

 private:
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Fixed-size set of edge ids, used for snapshots E_t.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t edge_count);

  /// Low `edge_count` bits of `mask` become the members.
  static EdgeSet from_mask(std::size_t edge_count, std::uint64_t mask);

  std::size_t capacity() const noexcept { return size_; }
  bool contains(EdgeId e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(EdgeId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeId e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  /// Members in increasing order.
  std::vector<EdgeId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<EdgeId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stg
