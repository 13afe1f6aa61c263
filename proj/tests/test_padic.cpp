#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fricke/representation.hpp"
#include "fricke/rng.hpp"
#include "fricke/valuation.hpp"
#include "fricke/word.hpp"

using namespace fricke;

namespace {

Word W(const std::string& text) { return Word::parse(text, 2); }

Automorphism pseudo_anosov() {
  return Automorphism(2, {W("aba"), W("ba")}, {W("aB"), W("bbA")});
}

QMat2 default_basis() { return {2, 1, 1, 1}; }

mpq_class Q(long n, long d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

GaussianRational random_gaussian(Rng& rng) {
  return {Q(rng.range(-30, 30), rng.range(1, 9)), Q(rng.range(-30, 30), rng.range(1, 9))};
}

const ValuationSpec kGauss = ValuationSpec::gaussian(5, 2, 1);

}  // namespace

TEST_CASE("rational p-adic valuation") {
  CHECK(vp(8, 2) == 3);
  CHECK(vp(Q(1, 25), 5) == -2);
  CHECK(vp(0, 7) == std::nullopt);  // +infinity sentinel
  CHECK(vp(Q(-12, 35), 7) == -1);
  CHECK_THROWS_AS(vp(3, 1), validation_error);
}

TEST_CASE("valuations are multiplicative and ultrametric") {
  Rng rng(3);
  const mpz_class p = 3;
  for (int t = 0; t < 500; ++t) {
    mpq_class a = Q(rng.range(-200, 200), rng.range(1, 81));
    mpq_class b = Q(rng.range(-200, 200), rng.range(1, 81));
    if (a != 0 && b != 0) {
      CHECK(vp(a * b, p) == mpq_class(*vp(a, p) + *vp(b, p)));
      if (a + b != 0) {
        CHECK(*vp(a + b, p) >= std::min(*vp(a, p), *vp(b, p)));
      }
    }
  }
}

TEST_CASE("gaussian valuation at 2+i") {
  CHECK(gaussian_valuation({1, 0}, kGauss) == 0);
  CHECK(gaussian_valuation({5, 0}, kGauss) == 1);       // 5 = (2+i)(2-i)
  CHECK(gaussian_valuation({0, 1}, kGauss) == 0);       // i is a unit
  CHECK(gaussian_valuation({2, 1}, kGauss) == 1);       // the prime itself
  CHECK(gaussian_valuation({2, -1}, kGauss) == 0);      // the conjugate prime
  // (2+i)^2 / 5 has valuation 2 - 1
  GaussianRational sq{Q(3, 5), Q(4, 5)};
  CHECK(gaussian_valuation(sq, kGauss) == 1);
  CHECK(gaussian_valuation({0, 0}, kGauss) == std::nullopt);
  CHECK(gaussian_valuation({25, 0}, kGauss) == 2);
}

TEST_CASE("gaussian valuation is multiplicative and ultrametric") {
  Rng rng(17);
  for (int t = 0; t < 500; ++t) {
    GaussianRational a = random_gaussian(rng);
    GaussianRational b = random_gaussian(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(*gaussian_valuation(a * b, kGauss) ==
          *gaussian_valuation(a, kGauss) + *gaussian_valuation(b, kGauss));
    const GaussianRational s = a + b;
    if (!s.is_zero()) {
      CHECK(*gaussian_valuation(s, kGauss) >=
            std::min(*gaussian_valuation(a, kGauss), *gaussian_valuation(b, kGauss)));
    }
  }
}

TEST_CASE("valuation specs validate their inputs") {
  CHECK_THROWS_AS(ValuationSpec::rational(10), validation_error);
  CHECK_THROWS_AS(ValuationSpec::gaussian(5, 1, 1), validation_error);
  CHECK_THROWS_AS(gaussian_valuation({1, 0}, ValuationSpec::rational(5)),
                  validation_error);
}

TEST_CASE("translation length from the trace valuation") {
  const ValuationSpec spec = ValuationSpec::rational(101);
  CHECK(translation_length(QMat2::identity(), spec) == 0);
  CHECK(translation_length(twist_matrix(spec), spec) == 2);  // tr = p + 1/p
  // integral unimodular matrices act with translation length zero
  CHECK(translation_length(QMat2{2, 1, 1, 1}, spec) == 0);
  CHECK(translation_length(QMat2{0, -1, 1, 0}, spec) == 0);  // tr = 0, v = +inf

  const GMat2 gd = gaussian_twist_matrix(kGauss);
  CHECK(gd.det() == GaussianRational{1, 0});
  CHECK(translation_length(gd, kGauss) == 2);
}

TEST_CASE("build_representation validates the fixture") {
  const RepresentationSpec rep = build_representation(2, 101, default_basis());
  CHECK(rep.images.size() == 2);
  CHECK(rep.images[0] == twist_matrix(rep.val));
  CHECK(rep.images[1] == rep.S * rep.D * rep.S.inverse());
  for (const QMat2& m : rep.images) CHECK(m.det() == 1);
}

TEST_CASE("build_representation error paths") {
  CHECK_THROWS_AS(build_representation(2, 2, default_basis()), prime_too_small);
  CHECK_THROWS_AS(build_representation(2, 101, QMat2::identity()), bad_basis);
  CHECK_THROWS_AS(build_representation(2, 101, QMat2{1, Q(1, 2), 0, 1}), bad_basis);
}

TEST_CASE("certified length formula on small and random words") {
  const RepresentationSpec rep = build_representation(2, 101, default_basis());

  // identity word: both sides zero
  const Word trivial = reduce(W("aA"));
  CertifyReport r0 = certify_length_formula(rep, std::vector<Word>{trivial});
  CHECK(r0.passed());

  // generator: valuation -1, lengths 2 = 2*1
  CHECK(translation_length(psi(rep, W("a")), rep.val) == 2);
  CHECK(vp(psi(rep, W("a")).trace(), 101) == -1);

  auto words = cyclically_reduced_words(2, 5);
  CertifyReport r1 = certify_length_formula(rep, words);
  CHECK(r1.words_checked == words.size());
  CHECK(r1.passed());

  Rng rng(1);
  std::vector<Word> random_words;
  for (int t = 0; t < 50; ++t) {
    random_words.push_back(
        random_cyclically_reduced_word(rng, 2, rng.below(8) + 1));
  }
  CertifyReport r2 = certify_length_formula(rep, random_words);
  CHECK(r2.passed());

  for (const Word& w : random_words) {
    CHECK(psi(rep, w).det() == 1);
  }
}

TEST_CASE("a too-small prime fails certification with witnesses") {
  // p = 5 passes the projective distinctness check for this S but words
  // can still be checked; construct a spec directly at a colliding prime
  // by bypassing build via a larger rank-2 word set. Use p = 3: the
  // four test points stay distinct mod 3, so build succeeds, and the
  // length formula itself is what certification probes.
  const RepresentationSpec rep = build_representation(2, 3, default_basis());
  auto words = cyclically_reduced_words(2, 4);
  CertifyReport r = certify_length_formula(rep, words);
  // not asserting failure count: small primes may or may not survive;
  // the report must be internally consistent either way
  CHECK(r.words_checked == words.size());
  for (const auto& f : r.failures) {
    CHECK(f.expected != f.actual);
  }
}

TEST_CASE("lower bound rate fixtures") {
  const RepresentationSpec rep = build_representation(2, 101, default_basis());

  CHECK(lower_bound_rate(Automorphism::identity(2), rep) == 0.0);

  Automorphism tx(2, {W("a"), W("ba")}, {W("a"), W("bA")});
  CHECK(lower_bound_rate(tx, rep) == 0.0);  // T_X fixes x1, double-log rate 0

  const double target = std::log((3.0 + std::sqrt(5.0)) / 2.0);
  const double rate = lower_bound_rate(pseudo_anosov(), rep);
  CHECK(std::abs(rate - target) < 0.02 * target);
}

TEST_CASE("psi rejects words beyond the representation rank") {
  const RepresentationSpec rep = build_representation(2, 101, default_basis());
  CHECK_THROWS_AS(psi(rep, Word::parse("c", 3)), validation_error);
}
