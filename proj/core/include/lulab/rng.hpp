#pragma once

#include <cstdint>

namespace lulab {

// SplitMix64 finalizer. Streams are addressed by position: the value at
// `index` of the stream with a given seed is mix64(seed + index * GOLDEN).
// No sequential state anywhere, so queries are order-independent.
inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

constexpr uint64_t stream_at(uint64_t seed, uint64_t index) {
  return mix64(seed + index * kGolden);
}

// Uniform in [0, 1), 53-bit resolution.
constexpr double unit_real(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Small sequential generator for tests and enumeration shuffling.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(uint64_t seed) : state_(seed) {}
  constexpr uint64_t next() { return mix64(state_ += kGolden); }
  // Uniform in [0, bound).
  uint64_t next_below(uint64_t bound) { return bound ? next() % bound : 0; }
  double next_unit() { return unit_real(next()); }

 private:
  uint64_t state_;
};

}  // namespace lulab
