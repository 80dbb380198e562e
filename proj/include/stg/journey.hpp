#pragma once

#include <optional>
#include <vector>

#include "stg/graph.hpp"
#include "stg/trace.hpp"

namespace stg {

/// (e, t) with e present in E_t.
struct TimeEdge {
  EdgeId edge;
  Time time;

  friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

/// Time-edges over a path of G with strictly increasing labels.
struct Journey {
  std::vector<TimeEdge> steps;
  Time arrival() const { return steps.empty() ? 0 : steps.back().time; }
};

struct ForemostResult {
  std::optional<Time> arrival;     // nullopt: not reached within the trace
  std::optional<Journey> witness;  // set iff arrival is
};

/// Online earliest-arrival sweep. The source holds the information from
/// time `start`; feeding snapshots E_{start+1}, E_{start+2}, ... relaxes
/// every present edge (u, v) with arrival[u] < t.
class ForemostSweep {
 public:
  ForemostSweep(const StaticGraph& graph, VertexId source, Time start = 0);

  /// Processes snapshot E_t where t = current_time() + 1.
  void step(const EdgeSet& snapshot);

  Time current_time() const noexcept { return now_; }
  bool reached(VertexId v) const { return arrival_.at(v) != kUnreached; }
  std::optional<Time> arrival(VertexId v) const;

  /// Journey to `target` rebuilt from first-arrival predecessors.
  std::optional<Journey> witness(VertexId target) const;

 private:
  static constexpr Time kUnreached = ~Time{0};

  const StaticGraph* graph_;
  VertexId source_;
  Time now_;
  std::vector<Time> arrival_;
  std::vector<EdgeId> via_;
  std::vector<VertexId> informed_;
};

/// Foremost s-y arrival on a realized trace using labels in (start, T].
ForemostResult foremost_arrival(const TemporalTrace& trace, const StaticGraph& graph, VertexId s,
                                VertexId y, Time start = 0);

}  // namespace stg
