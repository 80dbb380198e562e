#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stg/probability.hpp"

namespace stg {

/// Presence pattern of one edge over its last k snapshots.
///
/// Bit i (offset i) records presence in snapshot t-k+i+1, so offset k-1 is
/// the most recent snapshot. The memoryless model uses k = 0.
struct EdgeHistory {
  unsigned k = 0;
  std::uint32_t bits = 0;

  bool present_at(unsigned offset) const { return (bits >> offset) & 1U; }

  /// History after appending one snapshot in which the edge is (not) present.
  EdgeHistory shifted(bool present) const {
    if (k == 0) return *this;
    return {k, (bits >> 1) | (static_cast<std::uint32_t>(present) << (k - 1))};
  }

  friend bool operator==(const EdgeHistory&, const EdgeHistory&) = default;
};

/// Per-edge appearance law p_e(H) over all 2^k histories.
///
/// Memoryless laws are the k = 0 case with a single table entry. A memory-1
/// law built from birth/death probabilities (p, q) has table [p, 1 - q].
class EdgeLaw {
 public:
  static constexpr unsigned kMaxMemory = 16;

  static EdgeLaw memoryless(Probability p);
  static EdgeLaw memory1(Probability birth, Probability death);
  /// Throws PreconditionError unless table.size() == 2^k.
  static EdgeLaw memory_k(unsigned k, std::vector<Probability> table);

  unsigned memory() const noexcept { return k_; }
  const std::vector<Probability>& table() const noexcept { return table_; }

  /// Unchecked lookup by raw history bits.
  const Probability& at(std::uint32_t bits) const { return table_[bits]; }

  Probability min_probability() const;
  Probability max_probability() const;

  /// Same law expressed over a longer memory; the extra (older) bits are
  /// ignored.
  EdgeLaw lifted(unsigned k) const;

  /// Graph-spec law text, e.g. "memoryless:1/2" or "memory1:3/10,7/10".
  std::string to_string() const;

  friend bool operator==(const EdgeLaw&, const EdgeLaw&) = default;

 private:
  enum class Declared : std::uint8_t { Memoryless, Memory1, MemoryK };

  EdgeLaw(Declared declared, unsigned k, std::vector<Probability> table)
      : declared_(declared), k_(k), table_(std::move(table)) {}

  Declared declared_ = Declared::Memoryless;
  unsigned k_ = 0;
  std::vector<Probability> table_;
};

/// p_e(H). Throws PreconditionError when the history length differs from
/// the law's memory.
Probability appearance_prob(const EdgeLaw& law, const EdgeHistory& history);

}  // namespace stg
