#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace stabrank {

/// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of stream `stream` under the experiment seed `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

/// Portable random stream: std::mt19937_64 (whose output sequence is fixed by
/// the C++ standard) plus distribution code that does not depend on the
/// standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound == 0 ? 0 : (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  /// Moves a uniformly chosen m-subset of `values` into its first m slots, in
  /// random order (partial Fisher-Yates).
  template <typename T>
  void choose_front(std::span<T> values, std::size_t m) {
    for (std::size_t i = 0; i < m && i < values.size(); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(values.size() - i));
      std::swap(values[i], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stabrank
