#pragma once

#include <cstdint>
#include <random>

namespace fricke {

/// Deterministic random source. All randomized routines in the library
/// (matrix sampling, word sampling) draw from one of these, seeded from
/// the caller's configuration, so identical configs replay identically.
///
/// Raw mt19937_64 output is pinned by the standard; the integer-range
/// helpers below are hand-rolled because std::uniform_int_distribution
/// is not portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fricke
