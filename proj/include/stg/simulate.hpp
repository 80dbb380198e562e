#pragma once

#include <cstdint>

#include "stg/best_policy.hpp"
#include "stg/model.hpp"

namespace stg {

struct SimulationResult {
  double mean = 0.0;        // over completed runs
  double std_error = 0.0;   // of the mean
  std::uint64_t completed = 0;
  std::uint64_t truncated = 0;  // runs that hit the safety horizon
};

/// Monte-Carlo arrival of the h-greedy policy from s, starting at the
/// model's initial history. Each day draws the next snapshot, then moves
/// with policy_next_move on h(., new history). Run j uses the stream
/// derive_stream_seed(seed, j); runs longer than max_steps are truncated.
SimulationResult simulate_policy(const StochasticModel& model, const HTable& h, VertexId s, VertexId y,
                                 std::uint64_t seed, std::uint64_t reps, std::uint64_t max_steps = 1'000'000);

}  // namespace stg
