#pragma once

#include <cstdint>
#include <limits>

namespace qauth {

/// Splittable random stream built on SplitMix64.
///
/// A run owns one root seed. Each trial and each sub-task derives its own
/// stream with `substream(index)`, which hashes (state, index) into a fresh
/// seed. Results therefore depend only on the root seed and the index path,
/// never on thread scheduling.
///
/// Satisfies UniformRandomBitGenerator so it can drive <random> distributions.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  bool coin() noexcept { return ((*this)() >> 63) != 0; }

  /// Independent child stream; does not advance this stream.
  [[nodiscard]] RandomStream substream(std::uint64_t index) const noexcept {
    return RandomStream(mix(seed_ ^ mix(index + 0x632be59bd9b4e019ULL)));
  }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace qauth
