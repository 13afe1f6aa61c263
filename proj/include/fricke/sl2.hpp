#pragma once

#include <gmpxx.h>

#include "fricke/error.hpp"
#include "fricke/rng.hpp"
#include "fricke/word.hpp"

namespace fricke {

/// 2x2 integer matrix; the oracle side of the trace calculus.
struct Mat2z {
  mpz_class a{0}, b{0}, c{0}, d{0};

  static Mat2z identity() { return {1, 0, 0, 1}; }
  mpz_class trace() const { return a + d; }
  mpz_class det() const { return a * d - b * c; }

  /// Inverse, valid for determinant-one matrices only.
  Mat2z sl2_inverse() const { return {d, -b, -c, a}; }

  friend Mat2z operator*(const Mat2z& x, const Mat2z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2z& x, const Mat2z& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// Random element of SL2(Z) with entries in [-5, 5], by rejection.
inline Mat2z random_sl2(Rng& rng) {
  for (;;) {
    Mat2z m{rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5),
            rng.range(-5, 5)};
    if (m.det() == 1) return m;
  }
}

/// Image of a rank-2 word under the representation X -> mx, Y -> my.
inline Mat2z word_matrix(const Word& w, const Mat2z& mx, const Mat2z& my) {
  if (w.max_index() > 2) throw validation_error("word_matrix needs a rank-2 word");
  Mat2z m = Mat2z::identity();
  for (Letter g : w.letters()) {
    const Mat2z& base = letter_index(g) == 1 ? mx : my;
    m = m * (g > 0 ? base : base.sl2_inverse());
  }
  return m;
}

}  // namespace fricke
