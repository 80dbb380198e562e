#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "stg/graph.hpp"
#include "stg/model.hpp"
#include "stg/probability.hpp"

namespace stg {

/// Exact expected foremost arrival E[X(s, y)] on a memoryless graph.
///
/// Flooding from s is a Markov chain on informed sets S containing s. Each
/// uninformed vertex v with an edge from S gets informed next step with
/// probability 1 - prod_{u in S} (1 - p_uv), independently of the others,
/// so the hitting time of {S : y in S} is solved by substitution over
/// supersets in decreasing mask order:
///
///     E[T_S] = (1 + sum_{S' > S} P(S -> S') E[T_S']) / (1 - P(S -> S)).
///
/// Throws BudgetExceeded when n > max_vertices and InfiniteExpectation when
/// y is unreachable through positive-probability edges.
template <class Scalar>
Scalar exact_min_arrival_memoryless(const StaticGraph& graph, std::span<const Probability> probs,
                                    VertexId s, VertexId y, std::size_t max_vertices = 14);

template <class Scalar>
Scalar exact_min_arrival_memoryless(const StochasticModel& model, VertexId s, VertexId y,
                                    std::size_t max_vertices = 14) {
  const auto probs = model.memoryless_probabilities();
  return exact_min_arrival_memoryless<Scalar>(model.graph(), probs, s, y, max_vertices);
}

struct MemoryKOracleResult {
  double expectation = 0.0;     // sum_{i <= steps} Pr[X >= i]
  std::uint64_t steps = 0;      // propagation steps taken
  double residual_mass = 0.0;   // Pr[X > steps]
  double tail_bound = 0.0;      // bound on the omitted sum
};

/// E[X(s, y)] for a memory-k model within additive eps_tail.
///
/// Propagates the joint law of (informed set, history) forward from the
/// model's initial history and accumulates Pr[X > t]. Stops once
/// Pr[X > t] * (n - 1) / p_min < eps_tail, where p_min is the smallest
/// appearance probability over all edges and histories. Throws
/// PreconditionError when p_min = 0 and BudgetExceeded when
/// 2^n * 2^{k m} exceeds max_states.
MemoryKOracleResult exact_min_arrival_memory_k(const StochasticModel& model, VertexId s, VertexId y,
                                               double eps_tail, std::uint64_t max_states = 1u << 22);

}  // namespace stg
