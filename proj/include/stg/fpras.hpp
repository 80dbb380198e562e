#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stg/model.hpp"
#include "stg/trace.hpp"

namespace stg {

enum class FprasMode { Paper, Practical };

std::string_view to_string(FprasMode mode);
/// "paper" or "practical"; throws ParseError otherwise.
FprasMode parse_fpras_mode(std::string_view text);

struct FprasConfig {
  double eps = 0.1;  // relative accuracy, in (0, 1)
  double c = 1.0;    // probability floor p_e >= n^-c (paper mode)
  FprasMode mode = FprasMode::Practical;
  std::uint64_t r = 10'000;             // experiments (practical mode)
  std::optional<Time> horizon;          // t' override (practical mode)
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t max_experiments = 50'000'000;
  bool keep_samples = true;
};

struct FprasResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t r = 0;
  Time horizon = 0;
  std::uint64_t failures = 0;  // experiments that did not reach y by the horizon
  std::uint64_t seed = 0;
  FprasMode mode = FprasMode::Practical;
  /// Per experiment arrival time, 0 for a failed experiment.
  std::vector<Time> samples;
};

/// Paper-mode experiment count ceil(2 n^{2c+3} / eps^2).
std::uint64_t paper_experiment_count(std::size_t n, double c, double eps);

/// Practical-mode horizon ceil(50 w*), w* the min-weight s-y path with
/// weights 1 / min_H p_e(H). Throws NoPathError when y is unreachable.
Time practical_horizon(const StochasticModel& model, VertexId s, VertexId y);

/// Mean foremost arrival over r independent experiments.
///
/// Experiment j evolves the model from its initial history with the stream
/// derive_stream_seed(seed, j) and floods from s until y is informed or the
/// horizon passes; this is the same as foremost_arrival on
/// sample_trace(model, initial, horizon, stream). Paper mode fixes
/// r = ceil(2 n^{2c+3} / eps^2) and t' = r n^{c+2}, requires every
/// appearance probability >= n^-c, and counts a failure as t'. Practical
/// mode drops failures from the mean and throws LowConfidenceError when
/// more than 10% of experiments fail. The result does not depend on
/// `threads`.
FprasResult fpras_estimate(const StochasticModel& model, VertexId s, VertexId y, const FprasConfig& cfg);

}  // namespace stg
