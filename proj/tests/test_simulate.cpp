#include <gtest/gtest.h>

#include "stg/best_policy.hpp"
#include "stg/errors.hpp"
#include "stg/mdp.hpp"
#include "stg/simulate.hpp"
#include "support.hpp"

using namespace stg;
using namespace stg::testing;

TEST(SimulatePolicy, FourCycleMatchesTheGreedyValue) {
  const std::vector<Probability> half(4, Probability(1, 2));
  const StochasticModel m = StochasticModel::memoryless(cycle4(), half);
  const HTable h = to_htable(memoryless_h_values<double>(cycle4(), half, 2), 4);
  const SimulationResult r = simulate_policy(m, h, 0, 2, 5, 100'000);
  EXPECT_NEAR(r.mean, 10.0 / 3.0, 0.02 * 10.0 / 3.0);
  EXPECT_EQ(r.completed, 100'000u);
  EXPECT_EQ(r.truncated, 0u);
}

TEST(SimulatePolicy, DeterministicEdge) {
  const std::vector<Probability> one{Probability::one()};
  const StochasticModel m = StochasticModel::memoryless(path_graph(1), one);
  const HTable h = to_htable(memoryless_h_values<double>(path_graph(1), one, 1), 1);
  const SimulationResult r = simulate_policy(m, h, 0, 1, 1, 1000);
  EXPECT_EQ(r.mean, 1.0);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(SimulatePolicy, Memory1SingleEdge) {
  const StochasticModel m(path_graph(1), {EdgeLaw::memory1(Probability(1, 2), Probability(1, 2))});
  const HTable h = value_iterate(m, 1).table;
  const SimulationResult r = simulate_policy(m, h, 0, 1, 9, 100'000);
  EXPECT_NEAR(r.mean, 2.0, 0.04);
}

TEST(SimulatePolicy, CountsTruncatedRuns) {
  const std::vector<Probability> rare{Probability(1, 64)};
  const StochasticModel m = StochasticModel::memoryless(path_graph(1), rare);
  const HTable h = to_htable(memoryless_h_values<double>(path_graph(1), rare, 1), 1);
  const SimulationResult r = simulate_policy(m, h, 0, 1, 2, 1000, 3);
  EXPECT_GT(r.truncated, 900u);
  EXPECT_EQ(r.completed + r.truncated, 1000u);
}

TEST(SimulatePolicy, RejectsMismatchedTables) {
  const std::vector<Probability> half(4, Probability(1, 2));
  const StochasticModel m = StochasticModel::memoryless(cycle4(), half);
  const HTable h = to_htable(memoryless_h_values<double>(cycle4(), half, 2), 4);
  EXPECT_THROW(simulate_policy(m, h, 0, 3, 1, 10), PreconditionError);
}
