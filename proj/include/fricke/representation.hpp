#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fricke/automorphism.hpp"
#include "fricke/error.hpp"
#include "fricke/growth.hpp"
#include "fricke/valuation.hpp"
#include "fricke/word.hpp"

namespace fricke {

/// 2x2 matrix over the rationals, exact.
struct QMat2 {
  mpq_class a{0}, b{0}, c{0}, d{0};

  static QMat2 identity() { return {1, 0, 0, 1}; }
  mpq_class trace() const { return a + d; }
  mpq_class det() const { return a * d - b * c; }

  QMat2 inverse() const {
    const mpq_class dt = det();
    if (dt == 0) throw validation_error("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  bool is_integral() const {
    return a.get_den() == 1 && b.get_den() == 1 && c.get_den() == 1 &&
           d.get_den() == 1;
  }

  friend QMat2 operator*(const QMat2& x, const QMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const QMat2& x, const QMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// 2x2 matrix over Q(i). Only what the Gaussian branch of the
/// certificate needs: the twist matrix, traces, determinants.
struct GMat2 {
  GaussianRational a, b, c, d;

  GaussianRational trace() const { return a + d; }
  GaussianRational det() const { return a * d - b * c; }

  friend GMat2 operator*(const GMat2& x, const GMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

/// Translation length of M on the Bruhat-Tits tree at the given
/// valuation: -2 min(v(tr M), 0). Zero whenever the trace is integral
/// at the prime, strictly positive (and even) for hyperbolic elements.
inline long translation_length(const QMat2& m, const ValuationSpec& spec) {
  const ValExp v = valuation(m.trace(), spec);
  return -2 * std::min(v.value_or(0), 0L);
}

inline long translation_length(const GMat2& m, const ValuationSpec& spec) {
  const ValExp v = gaussian_valuation(m.trace(), spec);
  return -2 * std::min(v.value_or(0), 0L);
}

/// diag(1/p, p): the hyperbolic building block of the rational-prime
/// representation; translation length 2.
inline QMat2 twist_matrix(const ValuationSpec& spec) {
  return {mpq_class(1) / mpq_class(spec.p), 0, 0, mpq_class(spec.p)};
}

/// diag((a+bi)^2/p, (a-bi)^2/p): its Gaussian-prime counterpart, a
/// determinant-one matrix with translation length 2 at (a+bi).
inline GMat2 gaussian_twist_matrix(const ValuationSpec& spec) {
  if (spec.kind != ValuationSpec::Kind::gaussian_split_prime) {
    throw validation_error("gaussian twist needs a gaussian-split-prime spec");
  }
  const mpq_class p(spec.p);
  const mpq_class a(spec.a), b(spec.b);
  return {GaussianRational{(a * a - b * b) / p, 2 * a * b / p},
          GaussianRational{0, 0},
          GaussianRational{0, 0},
          GaussianRational{(a * a - b * b) / p, -2 * a * b / p}};
}

/// A free-group representation into SL2(Q) whose generator images are
/// conjugates S^i D S^-i of the twist matrix D = diag(1/p, p). When the
/// 2n projective test vectors are pairwise distinct mod p, the images
/// translate along axes that pairwise meet in a single vertex, and the
/// translation length of any word image is twice its cyclically reduced
/// length. That identity is certified numerically, never assumed.
struct RepresentationSpec {
  int rank;
  ValuationSpec val;
  QMat2 S;
  QMat2 D;
  std::vector<QMat2> images;  // images[i] = S^i D S^-i

  const QMat2& image(int gen_index) const {  // 1-based
    return images[static_cast<std::size_t>(gen_index - 1)];
  }
};

namespace detail {

// distinct as points of the projective line
inline bool projectively_equal(const std::pair<mpz_class, mpz_class>& u,
                               const std::pair<mpz_class, mpz_class>& v) {
  return u.first * v.second - u.second * v.first == 0;
}

inline bool projectively_equal_mod(const std::pair<mpz_class, mpz_class>& u,
                                   const std::pair<mpz_class, mpz_class>& v,
                                   const mpz_class& p) {
  return (u.first * v.second - u.second * v.first) % p == 0;
}

}  // namespace detail

/// Build and validate the representation for the given rank, prime and
/// basis matrix S (which must lie in SL2(Z)). Throws bad_basis if the
/// projective test points already collide over Q, prime_too_small if
/// they only collide after reduction mod p; the caller's recourse for
/// the latter is a larger prime.
inline RepresentationSpec build_representation(int rank, const mpz_class& p,
                                               const QMat2& s) {
  if (rank < 2) throw validation_error("representation rank must be >= 2");
  ValuationSpec spec = ValuationSpec::rational(p);
  if (!s.is_integral() || s.det() != 1) {
    throw bad_basis("bad S: the basis matrix must lie in SL2(Z)");
  }

  // test vectors S^k e1, S^k e2 for k = 0..rank-1
  std::vector<std::pair<mpz_class, mpz_class>> points;
  QMat2 power = QMat2::identity();
  for (int k = 0; k < rank; ++k) {
    points.emplace_back(power.a.get_num(), power.c.get_num());  // S^k e1
    points.emplace_back(power.b.get_num(), power.d.get_num());  // S^k e2
    power = power * s;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (detail::projectively_equal(points[i], points[j])) {
        throw bad_basis("bad S: projective test points coincide over Q");
      }
      if (detail::projectively_equal_mod(points[i], points[j], p)) {
        throw prime_too_small("p too small: projective test points collide mod " +
                              p.get_str());
      }
    }
  }

  RepresentationSpec rep{rank, std::move(spec), s, QMat2::identity(), {}};
  rep.D = twist_matrix(rep.val);
  QMat2 conj = QMat2::identity();
  for (int i = 0; i < rank; ++i) {
    rep.images.push_back(conj * rep.D * conj.inverse());
    conj = conj * s;
  }
  return rep;
}

/// Image of a word under the representation, by left-fold exact
/// multiplication. Entry bit-length grows linearly in the word length.
inline QMat2 psi(const RepresentationSpec& rep, const Word& w) {
  if (w.max_index() > rep.rank) {
    throw validation_error("word uses a generator beyond the representation rank");
  }
  QMat2 m = QMat2::identity();
  for (Letter g : w.letters()) {
    const QMat2& base = rep.image(letter_index(g));
    m = m * (g > 0 ? base : base.inverse());
  }
  return m;
}

/// One failed word, with both sides of the length identity.
struct LengthCheckFailure {
  Word word;
  long expected;  // 2 |w|_red
  long actual;    // -2 min(v(tr psi(w)), 0)
};

struct CertifyReport {
  std::size_t words_checked = 0;
  std::vector<LengthCheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Check the translation-length identity
///   -2 min(v(tr psi(w)), 0) = 2 |w|_red
/// for each word, by exact matrix products. Failures signal that p is
/// too small or S degenerate; the caller rebuilds with better data.
inline CertifyReport certify_length_formula(const RepresentationSpec& rep,
                                            std::span<const Word> words) {
  CertifyReport report;
  for (const Word& w : words) {
    ++report.words_checked;
    const long expected = 2 * static_cast<long>(cyclic_length(w));
    const long actual = translation_length(psi(rep, w), rep.val);
    if (actual != expected) report.failures.push_back({w, expected, actual});
  }
  return report;
}

/// Orbit words f^k(x1) kept while their cyclic length stays small
/// enough for exact matrix products; these are the words whose
/// certification backs the lower-bound computation.
inline std::vector<Word> certification_sample(const Automorphism& f,
                                              const RepresentationSpec& rep,
                                              std::size_t max_matrix_length = 1000) {
  std::vector<Word> sample = cyclically_reduced_words(rep.rank, 3);
  Word w = cyclically_reduce(Word::parse("a", f.rank()));
  for (int k = 0; k < 64; ++k) {
    if (w.size() > max_matrix_length) break;
    sample.push_back(w);
    w = cyclically_reduce(apply(f, w));
  }
  return sample;
}

/// Lower-bound certificate for the algebraic entropy: the growth rate
/// of log log |tr_x1(f^n psi)|_v. With the certified length identity
/// v(tr psi(w)) = -|w|_red this equals the trailing-window slope of
/// log(|f^n(x1)|_red * log p), which is computed from word lengths
/// alone; no floating-point matrix powers enter. Certification failures
/// propagate as exceptions.
inline double lower_bound_rate(const Automorphism& f, const RepresentationSpec& rep,
                               int n_max = kDefaultGrowthNMax,
                               std::size_t budget = kDefaultGrowthBudget) {
  if (f.rank() != rep.rank) {
    throw validation_error("automorphism and representation ranks differ");
  }
  const std::vector<Word> sample = certification_sample(f, rep);
  const CertifyReport cert = certify_length_formula(rep, sample);
  if (!cert.passed()) {
    const auto& fail = cert.failures.front();
    throw prime_too_small("length-formula certification failed on word '" +
                          fail.word.str() + "' (expected " +
                          std::to_string(fail.expected) + ", got " +
                          std::to_string(fail.actual) + ")");
  }

  Word seed(std::vector<Letter>{1}, Form::cyclically_reduced);
  const std::vector<std::size_t> lengths = growth_sequence(f, seed, n_max, budget);
  const double logp = std::log(rep.val.p.get_d());
  const std::size_t m = lengths.size() - 1;
  if (m == 0) return 0.0;
  const std::size_t k = (m + 2) / 3;
  const double um = std::log(static_cast<double>(lengths[m]) * logp);
  const double umk = std::log(static_cast<double>(lengths[m - k]) * logp);
  return (um - umk) / static_cast<double>(k);
}

}  // namespace fricke
