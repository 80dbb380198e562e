#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stg/graph.hpp"
#include "stg/probability.hpp"

namespace stg {

enum class SpKind { Leaf, Series, Parallel };

struct SpNode {
  SpKind kind = SpKind::Leaf;
  std::size_t left = 0;   // child indices, internal nodes only
  std::size_t right = 0;
  EdgeId edge = 0;        // leaves only
  bool orientation = false;  // leaves: true when the source is the larger vertex id
  Probability p;          // leaves only
  VertexId source = 0;    // terminal pair (s, y) of the sub-graph
  VertexId sink = 0;
};

/// Binary decomposition tree of a two-terminal series-parallel graph.
///
/// Nodes are stored in post-order (children before parents, root last).
/// Terminals follow the composition rules: the root spans (0, 1); a series
/// node (s, y) gives its children (s, mid) and (mid, y) with a fresh mid
/// vertex; a parallel node gives both children (s, y). Leaves get edge ids
/// left to right.
class SpTree {
 public:
  static SpTree leaf(Probability p);
  static SpTree series(const SpTree& first, const SpTree& second);
  static SpTree parallel(const SpTree& first, const SpTree& second);

  const std::vector<SpNode>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return nodes_.size() - 1; }
  const SpNode& node(std::size_t i) const { return nodes_.at(i); }

  std::size_t leaf_count() const noexcept { return (nodes_.size() + 1) / 2; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  VertexId source() const { return nodes_.back().source; }
  VertexId sink() const { return nodes_.back().sink; }

  /// Leaf probabilities indexed by edge id.
  std::vector<Probability> edge_probabilities() const;

  /// Realizes the composed graph. Throws PreconditionError when a parallel
  /// composition would create a duplicate edge (multigraphs unsupported).
  StaticGraph underlying_graph(bool directed = false) const;

  /// Expression text, e.g. "P(S(e(1/2), e(1/2)), e(1))".
  std::string to_string() const;

 private:
  void assign_terminals();

  std::vector<SpNode> nodes_;
  std::size_t vertex_count_ = 2;
};

/// Grammar: expr := e(<p>) | S(expr, expr) | P(expr, expr).
/// Throws ParseError on malformed text.
SpTree parse_sp_expression(std::string_view text);

}  // namespace stg
