#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stg/graph.hpp"
#include "stg/model.hpp"

namespace stg {

using Time = std::uint64_t;

/// Realized temporal graph over a horizon T: snapshots E_1..E_T.
class TemporalTrace {
 public:
  TemporalTrace() = default;
  TemporalTrace(std::size_t edge_count, std::vector<EdgeSet> snapshots);

  Time horizon() const noexcept { return snapshots_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Snapshot E_t for t in 1..horizon().
  const EdgeSet& at(Time t) const { return snapshots_.at(t - 1); }
  const std::vector<EdgeSet>& snapshots() const noexcept { return snapshots_; }

  friend bool operator==(const TemporalTrace&, const TemporalTrace&) = default;

 private:
  std::size_t edge_count_ = 0;
  std::vector<EdgeSet> snapshots_;
};

/// Evolves `model` from `initial` for `horizon` steps using the stream
/// CounterRng(seed). Step t draws one uniform per edge in id order.
TemporalTrace sample_trace(const StochasticModel& model, const ModelState& initial, Time horizon,
                           std::uint64_t seed);

/// `trace <T> <m>` header, then one `t: e1 e2 ...` line per step.
std::string to_string(const TemporalTrace& trace);
TemporalTrace parse_trace(std::string_view text);

}  // namespace stg
