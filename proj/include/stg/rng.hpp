#pragma once

#include <cstdint>
#include <string_view>

namespace stg {

/// Counter-based generator, "splitmix64-counter/v1".
///
/// Draw i (i = 0, 1, ...) of a stream keyed by `key` is
///
///     z = key + (i + 1) * 0x9E3779B97F4A7C15          (mod 2^64)
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     out = z ^ (z >> 31)
///
/// i.e. SplitMix64 seeded with `key`. uniform() maps out to
/// (out >> 11) * 2^-53 in [0, 1); bernoulli(p) is uniform() < p. Stream keys
/// for experiment j under master seed s are derive_stream_seed(s, j).
class CounterRng {
 public:
  static constexpr std::string_view kName = "splitmix64-counter/v1";

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next_u64() noexcept { return mix(key_ + (++counter_) * kGolden); }
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) noexcept { return uniform() < p; }

  std::uint64_t draws() const noexcept { return counter_; }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Per-experiment stream key; independent of evaluation order.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return CounterRng::mix(CounterRng::mix(master ^ 0x6A09E667F3BCC909ULL) + index);
}

}  // namespace stg
