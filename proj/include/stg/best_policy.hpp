#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stg/graph.hpp"
#include "stg/model.hpp"
#include "stg/probability.hpp"

namespace stg {

/// h-values of the optimal online policy on a memoryless graph.
///
/// `order` lists admitted vertices by non-decreasing h, starting with y.
/// h[v] is nullopt for vertices that can never reach y.
template <class Scalar>
struct HValuesMemoryless {
  VertexId target = 0;
  std::vector<VertexId> order;
  std::vector<std::optional<Scalar>> h;
};

/// Greedy list construction. With L the current list, a vertex u outside it
/// has Q_u = prod_{l} (1 - p_{u, L_l}) and
///
///     h(u) = (1 + sum_j p_{u, L_j} prod_{l < j} (1 - p_{u, L_l}) h(L_j)) / (1 - Q_u);
///
/// the vertex minimizing this (lowest id on ties) is appended next. Both
/// sums are maintained incrementally, giving O(n^2) time. Requires an
/// undirected graph.
template <class Scalar>
HValuesMemoryless<Scalar> memoryless_h_values(const StaticGraph& graph, std::span<const Probability> probs,
                                               VertexId y);

/// h(a, y, H) for every vertex a and every global history H of a memory-k
/// model, stored as values[H * n + a]. Unreachable entries hold +inf.
class HTable {
 public:
  HTable() = default;
  HTable(std::size_t vertex_count, unsigned memory, std::size_t edge_count, VertexId target);

  std::size_t vertex_count() const noexcept { return n_; }
  unsigned memory() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return m_; }
  VertexId target() const noexcept { return y_; }
  std::uint64_t history_count() const noexcept { return histories_; }

  double& at(VertexId a, std::uint64_t history) { return values_[history * n_ + a]; }
  double at(VertexId a, std::uint64_t history) const { return values_.at(history * n_ + a); }
  double at(VertexId a, const ModelState& state) const { return at(a, state.index()); }

  /// h(., H) for one history.
  std::span<const double> row(std::uint64_t history) const {
    return std::span<const double>(values_).subspan(history * n_, n_);
  }
  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Columns vertex, history-bits, h ("-" history when k = 0, "inf" for
  /// unreachable entries).
  std::string to_csv() const;

 private:
  std::size_t n_ = 0;
  unsigned k_ = 0;
  std::size_t m_ = 0;
  VertexId y_ = 0;
  std::uint64_t histories_ = 1;
  std::vector<double> values_;
};

/// k = 0 embedding: one history, h as doubles (inf when unreachable).
template <class Scalar>
HTable to_htable(const HValuesMemoryless<Scalar>& h, std::size_t edge_count);

/// Closed-neighborhood vertex of `current` in `snapshot` with minimum h;
/// stays when `current` attains the minimum, otherwise the lowest id wins
/// ties. `h` has one entry per vertex.
VertexId policy_next_move(const StaticGraph& graph, std::span<const double> h, VertexId current,
                          const EdgeSet& snapshot);

}  // namespace stg
