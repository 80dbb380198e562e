#include "stg/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "stg/errors.hpp"
#include "stg/rng.hpp"

namespace stg {

SimulationResult simulate_policy(const StochasticModel& model, const HTable& h, VertexId s, VertexId y,
                                 std::uint64_t seed, std::uint64_t reps, std::uint64_t max_steps) {
  const StaticGraph& graph = model.graph();
  if (s >= graph.vertex_count() || y >= graph.vertex_count()) {
    throw PreconditionError("terminal outside the vertex range");
  }
  if (h.vertex_count() != graph.vertex_count() || h.memory() != model.memory() ||
      h.edge_count() != graph.edge_count()) {
    throw PreconditionError("h-table does not match the model");
  }
  if (h.target() != y) throw PreconditionError("h-table was computed for a different target");
  if (reps == 0) throw PreconditionError("simulation needs at least one run");

  SimulationResult result;
  double mean = 0.0;
  double m2 = 0.0;  // Welford accumulator
  for (std::uint64_t j = 0; j < reps; ++j) {
    CounterRng rng(derive_stream_seed(seed, j));
    ModelState state = model.initial_state();
    VertexId at = s;
    std::uint64_t t = 0;
    while (at != y && t < max_steps) {
      const EdgeSet snap = model.draw_snapshot(state, rng);
      state.advance(snap);
      ++t;
      at = policy_next_move(graph, h.row(state.index()), at, snap);
    }
    if (at != y) {
      ++result.truncated;
      continue;
    }
    ++result.completed;
    const double x = static_cast<double>(t);
    const double delta = x - mean;
    mean += delta / static_cast<double>(result.completed);
    m2 += delta * (x - mean);
  }
  result.mean = mean;
  if (result.completed > 1) {
    const double c = static_cast<double>(result.completed);
    result.std_error = std::sqrt(std::max(0.0, m2 / (c - 1.0)) / c);
  }
  return result;
}

}  // namespace stg
