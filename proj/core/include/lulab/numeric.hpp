#pragma once

#include <cmath>
#include <cstdint>

namespace lulab {

inline constexpr double kLog10Of2 = 0.30102999566398119521;

// All logarithms in score formulas are base 2, with log q defined as 1 for
// q < 2. The convention is applied at both nesting levels of log log.
inline double log2_conv(double x) { return x < 2.0 ? 1.0 : std::log2(x); }
inline double loglog2_conv(double x) { return log2_conv(log2_conv(x)); }

// Exact integer form of "k < log2(n)".
inline bool bits_below_log2(uint32_t k, uint64_t n) {
  if (k >= 64) return false;
  return (static_cast<unsigned __int128>(1) << k) < n;
}

}  // namespace lulab
