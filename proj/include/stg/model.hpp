#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stg/edge_law.hpp"
#include "stg/graph.hpp"
#include "stg/graph_spec.hpp"
#include "stg/rng.hpp"

namespace stg {

/// Global history H_t^(k): one k-bit EdgeHistory per edge, shared k.
class ModelState {
 public:
  ModelState() = default;
  ModelState(unsigned k, std::size_t edge_count) : k_(k), bits_(edge_count, 0) {}
  ModelState(unsigned k, std::vector<std::uint32_t> bits) : k_(k), bits_(std::move(bits)) {}

  unsigned memory() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return bits_.size(); }
  EdgeHistory history(EdgeId e) const { return {k_, bits_.at(e)}; }
  std::uint32_t bits(EdgeId e) const { return bits_[e]; }

  /// Shifts every edge's history by one snapshot.
  void advance(const EdgeSet& snapshot);

  /// Dense index sum_e bits(e) << (k*e); requires k*m <= 62.
  std::uint64_t index() const;
  static ModelState from_index(unsigned k, std::size_t edge_count, std::uint64_t index);

  /// Edge-major history bits, each edge oldest first; "-" when k = 0.
  std::string to_string() const;

  friend bool operator==(const ModelState&, const ModelState&) = default;

 private:
  unsigned k_ = 0;
  std::vector<std::uint32_t> bits_;
};

/// Memory-k stochastic temporal graph: underlying graph, per-edge laws
/// lifted to a common memory k, and the initial history H_0.
class StochasticModel {
 public:
  /// Default initial history is all-absent.
  StochasticModel(StaticGraph graph, std::vector<EdgeLaw> laws,
                  std::optional<ModelState> initial = std::nullopt);

  /// Honors per-edge `init=` bits; unspecified edges start all-absent.
  static StochasticModel from_spec(const GraphSpec& spec);

  /// Convenience: memoryless model with one probability per edge.
  static StochasticModel memoryless(StaticGraph graph, const std::vector<Probability>& probs);

  const StaticGraph& graph() const noexcept { return graph_; }
  const std::vector<EdgeLaw>& laws() const noexcept { return laws_; }
  unsigned memory() const noexcept { return k_; }
  bool is_memoryless() const noexcept { return k_ == 0; }
  const ModelState& initial_state() const noexcept { return initial_; }
  ModelState blank_state() const { return ModelState(k_, graph_.edge_count()); }

  double appearance_prob(EdgeId e, const ModelState& state) const {
    return law_probs_[e][state.bits(e)];
  }

  /// mu(next | state): product over edges of p or 1 - p.
  double snapshot_transition_prob(const ModelState& state, const EdgeSet& next) const;

  /// Smallest table entry over all edges and histories.
  double min_appearance_prob() const;

  /// Memoryless p_e per edge; throws PreconditionError when k > 0.
  std::vector<Probability> memoryless_probabilities() const;

  /// Draws the next snapshot from `state` (edge order 0..m-1, one uniform
  /// per edge) without advancing it.
  EdgeSet draw_snapshot(const ModelState& state, CounterRng& rng) const;

 private:
  StaticGraph graph_;
  std::vector<EdgeLaw> laws_;
  std::vector<std::vector<double>> law_probs_;
  unsigned k_ = 0;
  ModelState initial_;
};

}  // namespace stg
