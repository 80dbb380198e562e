#include <gtest/gtest.h>

#include <cmath>

#include "stg/errors.hpp"
#include "stg/min_arrival.hpp"
#include "stg/oracles.hpp"
#include "stg/sp_tree.hpp"
#include "support.hpp"

using namespace stg;
using namespace stg::testing;

namespace {

std::vector<mpq_class> q(std::initializer_list<mpq_class> xs) { return xs; }

const char* kC4 = "P(S(e(1/2), e(1/2)), S(e(1/2), e(1/2)))";

}  // namespace

TEST(PathExpectation, Examples) {
  const std::vector<Probability> a{Probability(1, 2), Probability(1, 3)};
  EXPECT_EQ(path_expectation<mpq_class>(a), 5);
  const std::vector<Probability> b{Probability::one()};
  EXPECT_DOUBLE_EQ(path_expectation<double>(b), 1.0);
  const std::vector<Probability> c(4, Probability(1, 2));
  EXPECT_EQ(path_expectation<mpq_class>(c), 8);
  const std::vector<Probability> d{Probability(1, 2), Probability::zero()};
  EXPECT_THROW(path_expectation<double>(d), InfiniteExpectation);
}

TEST(TruncationHorizon, Examples) {
  EXPECT_EQ(truncation_horizon(4.0, 1.0), 10);
  EXPECT_EQ(truncation_horizon(1.0, 1.0), 1);
  EXPECT_EQ(truncation_horizon(5.0, 0.01), 37);
  EXPECT_THROW(truncation_horizon(0.5, 0.1), PreconditionError);
  EXPECT_THROW(truncation_horizon(2.0, 0.0), PreconditionError);
  EXPECT_THROW(truncation_horizon(2.0, 1.5), PreconditionError);
}

TEST(SpArrivalDistribution, Examples) {
  const auto leaf = sp_arrival_distribution<mpq_class>(parse_sp_expression("e(1/2)"), 3);
  EXPECT_EQ(leaf.geq, q({1, mpq_class(1, 2), mpq_class(1, 4)}));
  EXPECT_EQ(leaf.eq, q({mpq_class(1, 2), mpq_class(1, 4)}));

  // Not a simple graph, but the DP itself accepts parallel leaves.
  const auto par = sp_arrival_distribution<mpq_class>(parse_sp_expression("P(e(1/2), e(1/2))"), 4);
  EXPECT_EQ(par.geq, q({1, mpq_class(1, 4), mpq_class(1, 16), mpq_class(1, 64)}));

  const auto ser = sp_arrival_distribution<mpq_class>(parse_sp_expression("S(e(1), e(1))"), 3);
  EXPECT_EQ(ser.geq, q({1, 1, 0}));
  EXPECT_EQ(ser.eq, q({0, 1}));
  EXPECT_EQ(ser.truncated_expectation(), 2);
}

TEST(SpArrivalDistribution, MatchesTraceEnumeration) {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = uniform_int(rng, 1, 4);
    const SpTree t = random_sp_tree(rng, m, 0.1);
    const std::size_t horizon = m <= 2 ? 5 : (m == 3 ? 4 : 3);
    const auto d = sp_arrival_distribution<double>(t, horizon);
    const auto ref = brute_force_tail(t.underlying_graph(), t.edge_probabilities(), t.source(), t.sink(), horizon);
    for (std::size_t i = 0; i < horizon; ++i) EXPECT_NEAR(d.geq[i], ref[i], 1e-12) << t.to_string() << " i=" << i;
  }
}

TEST(SpArrivalDistribution, IsAValidDistributionAndExactInRationals) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const SpTree t = random_sp_tree(rng, uniform_int(rng, 1, 8), 0.1);
    const auto dq = sp_arrival_distribution<mpq_class>(t, 12);
    const auto dd = sp_arrival_distribution<double>(t, 12);
    EXPECT_NO_THROW(check_distribution(dq));
    EXPECT_NO_THROW(check_distribution(dd, 1e-12));
    for (std::size_t i = 0; i < 12; ++i) EXPECT_NEAR(dd.geq[i], dq.geq[i].get_d(), 1e-12);
  }
}

TEST(SpArrivalDistribution, SeriesMeansAdd) {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const SpTree a = random_sp_tree(rng, uniform_int(rng, 1, 4), 0.25);
    const SpTree b = random_sp_tree(rng, uniform_int(rng, 1, 4), 0.25);
    const SpTree ab = SpTree::series(a, b);
    const double ea = fptas_series_parallel<double>(a, 1e-9).estimate;
    const double eb = fptas_series_parallel<double>(b, 1e-9).estimate;
    const double eab = fptas_series_parallel<double>(ab, 1e-9).estimate;
    EXPECT_NEAR(eab, ea + eb, 1e-7);
  }
}

TEST(SpArrivalDistribution, RaisingAnEdgeProbabilityLowersTheTail) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const SpTree t = random_sp_tree(rng, uniform_int(rng, 1, 6), 0.1);
    std::string text = t.to_string();
    // Replace the first leaf probability with 1.
    const auto open = text.find("e(");
    const auto close = text.find(')', open);
    text.replace(open, close - open + 1, "e(1)");
    const SpTree up = parse_sp_expression(text);
    const auto lo = sp_arrival_distribution<mpq_class>(t, 10);
    const auto hi = sp_arrival_distribution<mpq_class>(up, 10);
    for (std::size_t i = 0; i < 10; ++i) EXPECT_LE(hi.geq[i], lo.geq[i]);
  }
}

TEST(SpArrivalDistribution, CheckerRejectsBrokenDistributions) {
  ArrivalDistribution<double> d{3, {1.0, 0.5, 0.6}, {0.5, -0.1}};
  EXPECT_THROW(check_distribution(d), InvariantViolation);
  ArrivalDistribution<mpq_class> e{2, {mpq_class(1), mpq_class(1, 2)}, {mpq_class(1, 3)}};
  EXPECT_THROW(check_distribution(e), InvariantViolation);
}

TEST(SpArrivalDistribution, CsvLayout) {
  const auto d = sp_arrival_distribution<double>(parse_sp_expression("e(1/2)"), 2);
  EXPECT_EQ(d.to_csv(), "i,geq,eq\n1,1,0.5\n2,0.5,\n");
}

TEST(Fptas, Examples) {
  const auto c4 = fptas_series_parallel<mpq_class>(parse_sp_expression(kC4), 1e-3);
  const mpq_class exact(80, 27);
  EXPECT_LE(c4.estimate, exact);
  EXPECT_GT(c4.estimate, exact - mpq_class(1, 1000));
  EXPECT_DOUBLE_EQ(c4.min_weight, 4.0);

  const auto path = fptas_series_parallel<double>(parse_sp_expression("S(e(1/2), e(1/2))"), 1e-3);
  EXPECT_LE(path.estimate, 4.0 + 1e-12);
  EXPECT_GT(path.estimate, 4.0 - 1e-3);

  const auto leaf = fptas_series_parallel<double>(parse_sp_expression("e(1/4)"), 1e-2);
  EXPECT_LE(leaf.estimate, 4.0 + 1e-12);
  EXPECT_GT(leaf.estimate, 4.0 - 1e-2);
}

TEST(Fptas, RejectsZeroProbabilitiesAndBadEps) {
  EXPECT_THROW(fptas_series_parallel<double>(parse_sp_expression("S(e(1/2), e(0))"), 0.1), Error);
  EXPECT_THROW(fptas_series_parallel<double>(parse_sp_expression("e(1/2)"), 0.0), PreconditionError);
}

TEST(Fptas, WithinEpsOfTheInformedSetOracle) {
  Rng rng(45);
  int checked = 0;
  while (checked < 40) {
    const SpTree t = random_sp_tree(rng, uniform_int(rng, 1, 9), 0.2);
    if (t.vertex_count() > 8) continue;
    ++checked;
    const double eps = 1e-3;
    const auto probs = t.edge_probabilities();
    const double exact =
        exact_min_arrival_memoryless<double>(t.underlying_graph(), probs, t.source(), t.sink());
    const double est = fptas_series_parallel<double>(t, eps).estimate;
    EXPECT_LE(est, exact + 1e-9) << t.to_string();
    EXPECT_GT(est, exact - eps) << t.to_string();
  }
}
