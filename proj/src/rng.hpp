#pragma once

#include <cmath>
#include <cstdint>

#include "errors.hpp"

namespace saktomo {

// Counter-based pseudo-random stream built on the splitmix64 output function.
// The n-th raw value of a stream with key k is mix64(k + (n+1)*GOLDEN), so a
// stream is a pure function of (key, index) and traces carry the algorithm id
// below to pin the generator across implementations.
inline constexpr char kRngAlgorithmId[] = "splitmix64-streams-v1";

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derive an independent stream key from a parent key and an index/tag.
inline std::uint64_t derive_key(std::uint64_t key, std::uint64_t index) {
  return mix64(key ^ ((index + 1) * kGolden));
}

class SequentialRng {
 public:
  explicit SequentialRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Inverse-CDF exponential with the given mean.
  double exponential(double mean) { return -mean * std::log1p(-next_unit()); }

  // Box-Muller; always consumes exactly two raw values.
  double gaussian() {
    double u1 = next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Marsaglia-Tsang for shape >= 1; shape < 1 is boosted via gamma(shape+1) * u^(1/shape).
  double gamma(double shape, double scale) {
    if (shape < 1.0) {
      double u = next_unit();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = gaussian();
      double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      double v = t * t * t;
      double u = next_unit();
      if (u == 0.0) continue;
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v * scale;
      }
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Named substreams of the experiment seed. Keeping delays, row selection and
// measurement noise on separate streams means toggling one does not perturb
// the others.
struct RngStreams {
  std::uint64_t delays_key;
  std::uint64_t selector_key;
  std::uint64_t noise_key;

  explicit RngStreams(std::uint64_t seed)
      : delays_key(derive_key(seed, 0x00D31A75ull)),
        selector_key(derive_key(seed, 0x005E1EC7ull)),
        noise_key(derive_key(seed, 0x004015E0ull)) {}

  // Fresh stream for probe k, link l; rejection sampling in one draw cannot
  // shift any other draw.
  SequentialRng delay_rng(std::uint64_t k, std::uint64_t link) const {
    return SequentialRng(derive_key(derive_key(delays_key, k), link));
  }
  SequentialRng noise_rng(std::uint64_t k) const {
    return SequentialRng(derive_key(noise_key, k));
  }
  SequentialRng selector_rng() const { return SequentialRng(selector_key); }
};

}  // namespace saktomo
