#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace fricke {

/// Sub-exponential cutoff: a trailing-window ratio below 1 + 0.01*k is
/// treated as polynomial growth and reported as rate 0, so that
/// log-of-ratio noise on reducible maps does not show up as spurious
/// entropy.
inline constexpr double kPolyGrowthEps = 0.01;

/// Exponential growth rate (nats per step) of a positive sequence,
/// extracted as the slope log(v_m / v_{m-k}) / k over the trailing
/// window k = ceil(m/3). Ratios of consecutive values oscillate for
/// polynomially growing sequences; the trailing window damps this.
template <class T>
double trailing_window_rate(const std::vector<T>& values) {
  const std::size_t m = values.size() == 0 ? 0 : values.size() - 1;
  if (m == 0) return 0.0;
  const std::size_t k = (m + 2) / 3;
  const double ratio =
      static_cast<double>(values[m]) / static_cast<double>(values[m - k]);
  if (ratio < 1.0 + kPolyGrowthEps * static_cast<double>(k)) return 0.0;
  return std::log(ratio) / static_cast<double>(k);
}

}  // namespace fricke
