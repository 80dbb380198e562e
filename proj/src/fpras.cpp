#include "stg/fpras.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "stg/errors.hpp"
#include "stg/journey.hpp"
#include "stg/rng.hpp"
#include "stg/shortest_path.hpp"

namespace stg {

std::string_view to_string(FprasMode mode) { return mode == FprasMode::Paper ? "paper" : "practical"; }

FprasMode parse_fpras_mode(std::string_view text) {
  if (text == "paper") return FprasMode::Paper;
  if (text == "practical") return FprasMode::Practical;
  throw ParseError("unknown FPRAS mode '" + std::string(text) + "' (expected paper or practical)");
}

std::uint64_t paper_experiment_count(std::size_t n, double c, double eps) {
  const long double r = 2.0L * std::pow(static_cast<long double>(n), 2.0L * c + 3.0L) /
                        (static_cast<long double>(eps) * eps);
  if (!(r < 1.8e19L)) throw BudgetExceeded("paper-mode experiment count overflows 64 bits");
  return static_cast<std::uint64_t>(std::ceil(r));
}

Time practical_horizon(const StochasticModel& model, VertexId s, VertexId y) {
  std::vector<Probability> floor;
  floor.reserve(model.laws().size());
  for (const EdgeLaw& law : model.laws()) floor.push_back(law.min_probability());
  const WeightedGraph weighted(model.graph(), std::span<const Probability>(floor));
  const WeightedPath path = min_weight_path(weighted, s, y);
  return static_cast<Time>(std::ceil(50.0 * path.weight));
}

namespace {

Time run_experiment(const StochasticModel& model, VertexId s, VertexId y, Time horizon, std::uint64_t stream) {
  CounterRng rng(stream);
  ModelState state = model.initial_state();
  ForemostSweep sweep(model.graph(), s);
  for (Time t = 1; t <= horizon; ++t) {
    const EdgeSet snap = model.draw_snapshot(state, rng);
    state.advance(snap);
    sweep.step(snap);
    if (sweep.reached(y)) return t;
  }
  return 0;
}

}  // namespace

FprasResult fpras_estimate(const StochasticModel& model, VertexId s, VertexId y, const FprasConfig& cfg) {
  const std::size_t n = model.graph().vertex_count();
  if (s >= n || y >= n) throw PreconditionError("terminal outside the vertex range");
  if (s == y) throw PreconditionError("FPRAS needs distinct terminals");

  FprasResult result;
  result.seed = cfg.seed;
  result.mode = cfg.mode;
  if (cfg.mode == FprasMode::Paper) {
    if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) throw PreconditionError("eps must lie in (0, 1)");
    if (!(cfg.c > 0.0)) throw PreconditionError("floor exponent c must be positive");
    const double floor = std::pow(static_cast<double>(n), -cfg.c);
    const double p_min = model.min_appearance_prob();
    if (p_min < floor * (1.0 - 1e-12)) {
      throw PreconditionError("paper mode needs every appearance probability >= n^-c = " + std::to_string(floor) +
                              " (smallest is " + std::to_string(p_min) + ")");
    }
    result.r = paper_experiment_count(n, cfg.c, cfg.eps);
    const long double horizon = static_cast<long double>(result.r) * std::pow(static_cast<long double>(n), cfg.c + 2.0L);
    if (!(horizon < 1.8e19L)) throw BudgetExceeded("paper-mode horizon overflows 64 bits");
    result.horizon = static_cast<Time>(std::ceil(horizon));
  } else {
    result.r = cfg.r;
    result.horizon = cfg.horizon ? *cfg.horizon : practical_horizon(model, s, y);
  }
  if (result.r == 0) throw PreconditionError("FPRAS needs at least one experiment");
  if (result.horizon == 0) throw PreconditionError("FPRAS horizon must be positive");
  if (result.r > cfg.max_experiments) {
    throw BudgetExceeded("FPRAS: " + std::to_string(result.r) + " experiments exceed the budget of " +
                         std::to_string(cfg.max_experiments));
  }

  std::vector<Time> samples(result.r, 0);
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(
                                                                             std::min<std::uint64_t>(result.r, 1024))));
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t j = begin; j < end; ++j) {
      samples[j] = run_experiment(model, s, y, result.horizon, derive_stream_seed(cfg.seed, j));
    }
  };
  if (threads == 1) {
    run_range(0, result.r);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (result.r + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(result.r, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(result.r, begin + chunk);
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  // Aggregate in index order so the result is independent of scheduling.
  double mean = 0.0;
  double m2 = 0.0;
  std::uint64_t counted = 0;
  for (Time x : samples) {
    if (x == 0) {
      ++result.failures;
      if (cfg.mode == FprasMode::Practical) continue;
      x = result.horizon;
    }
    ++counted;
    const double v = static_cast<double>(x);
    const double delta = v - mean;
    mean += delta / static_cast<double>(counted);
    m2 += delta * (v - mean);
  }
  if (cfg.mode == FprasMode::Practical && result.failures * 10 > result.r) {
    throw LowConfidenceError("FPRAS: " + std::to_string(result.failures) + " of " + std::to_string(result.r) +
                                 " experiments did not reach the target within " + std::to_string(result.horizon) +
                                 " steps",
                             result.failures, result.r);
  }
  result.estimate = mean;
  if (counted > 1) {
    const double c = static_cast<double>(counted);
    result.std_error = std::sqrt(std::max(0.0, m2 / (c - 1.0)) / c);
  }
  if (cfg.keep_samples) result.samples = std::move(samples);
  return result;
}

}  // namespace stg
