#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "fricke/error.hpp"

namespace fricke {

/// Dense square matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  explicit IntMatrix(int dimension)
      : dim_(dimension),
        entries_(static_cast<std::size_t>(dimension) *
                 static_cast<std::size_t>(dimension)) {
    if (dimension < 1) throw validation_error("matrix dimension must be >= 1");
  }

  static IntMatrix identity(int dimension) {
    IntMatrix m(dimension);
    for (int i = 0; i < dimension; ++i) m.at(i, i) = 1;
    return m;
  }

  int dimension() const { return dim_; }

  mpz_class& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * dim_ + c];
  }
  const mpz_class& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * dim_ + c];
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  int dim_;
  std::vector<mpz_class> entries_;
};

/// Spectral radius of |M| (entrywise absolute values) by power
/// iteration from the all-ones vector, with max-norm renormalization.
/// Successive growth ratios are smoothed over a window of two to damp
/// period-two oscillation; iteration stops when the smoothed estimate
/// moves by less than tol. Returns 1.0 for the identity (the first
/// step is exact there). Non-primitive inputs converge polynomially,
/// so the result can sit O(sqrt(tol)) above the true radius; callers
/// that need tighter bounds pass a smaller tol.
inline double spectral_radius(const IntMatrix& m, double tol,
                              long max_iterations = 400000) {
  if (tol <= 0) throw validation_error("tolerance must be positive");
  const int n = m.dimension();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a[static_cast<std::size_t>(r) * n + c] = std::abs(m.at(r, c).get_d());
    }
  }
  std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(v);
  double prev_ratio = -1.0, prev_smoothed = -1.0;
  for (long it = 0; it < max_iterations; ++it) {
    double norm = 0.0;
    for (int r = 0; r < n; ++r) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) {
        s += a[static_cast<std::size_t>(r) * n + c] * v[static_cast<std::size_t>(c)];
      }
      w[static_cast<std::size_t>(r)] = s;
      norm = std::max(norm, s);
    }
    if (norm == 0.0) return 0.0;  // nilpotent
    const double ratio = norm;    // v is renormalized to max-norm 1
    for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = w[static_cast<std::size_t>(r)] / norm;
    if (prev_ratio >= 0.0) {
      const double smoothed = std::sqrt(ratio * prev_ratio);
      if (prev_smoothed >= 0.0 && std::abs(smoothed - prev_smoothed) < tol) {
        return smoothed;
      }
      prev_smoothed = smoothed;
    }
    prev_ratio = ratio;
  }
  throw convergence_error("power iteration did not converge");
}

}  // namespace fricke
