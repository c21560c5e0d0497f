#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace disckit {

// Splittable deterministic generator (splitmix64). All stochastic steps in
// the library derive an independent stream from (master seed, purpose tag,
// stream index), so results never depend on evaluation order or thread
// schedule.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one value per call; the second root is
  // discarded to keep the stream position independent of call pairing).
  double next_normal() {
    double u1 = 1.0 - next_unit();  // (0, 1]
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

namespace stream_tag {
inline constexpr std::uint64_t kShuffleRep = 0x7265706574697469ULL;
inline constexpr std::uint64_t kShuffleClass = 0x66616b65636c7373ULL;
inline constexpr std::uint64_t kSynthClass = 0x73796e7468636c73ULL;
}  // namespace stream_tag

// Mixes a seed with a domain tag and a stream index into a fresh stream key.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  SplitMix64 g(seed ^ tag);
  std::uint64_t a = g.next_u64();
  SplitMix64 h(a + index);
  return h.next_u64();
}

// Draws `count` distinct indices from [0, n) (partial Fisher-Yates).
// Deterministic for a given generator state.
inline std::vector<std::uint32_t> sample_without_replacement(SplitMix64& rng, std::uint32_t n,
                                                             std::uint32_t count) {
  std::vector<std::uint32_t> idx(n);
  for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t j = i + static_cast<std::uint32_t>(rng.next_below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

}  // namespace disckit
