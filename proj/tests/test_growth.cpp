#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fricke/automorphism.hpp"
#include "fricke/growth.hpp"
#include "fricke/intmatrix.hpp"
#include "fricke/word.hpp"

using namespace fricke;

namespace {

Word W(const std::string& text) { return Word::parse(text, 2); }

Automorphism dehn_twist_x() {
  return Automorphism(2, {W("a"), W("ba")}, {W("a"), W("bA")});
}

Automorphism pseudo_anosov() {
  return Automorphism(2, {W("aba"), W("ba")}, {W("aB"), W("bbA")});
}

// log((3+sqrt(5))/2), the growth rate of the pseudo-Anosov fixture
const double kPaRate = std::log((3.0 + std::sqrt(5.0)) / 2.0);

}  // namespace

TEST_CASE("growth_sequence on fixed and linear seeds") {
  Automorphism id = Automorphism::identity(2);
  CHECK(growth_sequence(id, W("a"), 5, 1000000) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1, 1});

  Automorphism tx = dehn_twist_x();
  CHECK(growth_sequence(tx, W("b"), 4, 1000000) ==
        std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(growth_sequence(tx, W("a"), 4, 1000000) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});

  CHECK_THROWS_AS(growth_sequence(tx, W("aA"), 4, 1000000), validation_error);
}

TEST_CASE("growth_sequence budget stop") {
  bool hit = false;
  auto lengths = growth_sequence(pseudo_anosov(), W("a"), 100, 1000, &hit);
  CHECK(hit);
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  CHECK(total <= 1000);
}

TEST_CASE("estimate_rho fixtures") {
  GrowthEstimate id_est = estimate_rho(Automorphism::identity(2));
  CHECK(id_est.rho_estimate == 0.0);
  CHECK_FALSE(id_est.budget_hit);

  GrowthEstimate tx_est = estimate_rho(dehn_twist_x());
  CHECK(tx_est.rho_estimate < 0.05);
  CHECK(tx_est.per_seed_rates.at("a") == 0.0);

  GrowthEstimate pa_est = estimate_rho(pseudo_anosov());
  CHECK(pa_est.budget_hit);
  CHECK(std::abs(pa_est.rho_estimate - kPaRate) < 0.02 * kPaRate);
  CHECK(pa_est.lower_bound_abelian <= pa_est.rho_estimate + 1e-6);

  CHECK_THROWS_AS(estimate_rho(dehn_twist_x(), {W("aA")}), validation_error);
}

TEST_CASE("abelianization columns are exponent sums") {
  IntMatrix id = abelianization(Automorphism::identity(2));
  CHECK(id == IntMatrix::identity(2));

  IntMatrix tx = abelianization(dehn_twist_x());
  CHECK(tx.at(0, 0) == 1);
  CHECK(tx.at(1, 0) == 0);
  CHECK(tx.at(0, 1) == 1);
  CHECK(tx.at(1, 1) == 1);

  // product of the two twist matrices: trace 3, determinant 1
  IntMatrix pa = abelianization(pseudo_anosov());
  CHECK(pa.at(0, 0) + pa.at(1, 1) == 3);
  CHECK(pa.at(0, 0) * pa.at(1, 1) - pa.at(0, 1) * pa.at(1, 0) == 1);
}

TEST_CASE("spectral radius by power iteration") {
  CHECK(spectral_radius(IntMatrix::identity(3), 1e-9) == 1.0);

  IntMatrix unipotent(2);
  unipotent.at(0, 0) = 1;
  unipotent.at(0, 1) = 1;
  unipotent.at(1, 1) = 1;
  CHECK(std::abs(spectral_radius(unipotent, 1e-8) - 1.0) < 1e-3);

  IntMatrix pa = abelianization(pseudo_anosov());
  const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(spectral_radius(pa, 1e-10) - golden) < 1e-9);

  IntMatrix swap(2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(spectral_radius(swap, 1e-9) == 1.0);

  CHECK_THROWS_AS(spectral_radius(pa, -1.0), validation_error);
}

TEST_CASE("abelian eigenvalue lower-bounds word growth on fixtures") {
  for (const Automorphism& f :
       {Automorphism::identity(2), dehn_twist_x(), pseudo_anosov()}) {
    GrowthEstimate est = estimate_rho(f);
    CHECK(est.lower_bound_abelian <= est.rho_estimate + 0.05);
  }
}

TEST_CASE("rho scales along powers of the map") {
  Automorphism f = pseudo_anosov();
  double rho1 = estimate_rho(f).rho_estimate;
  Automorphism f2 = compose(f, f);
  Automorphism f3 = compose(f, f2);
  double rho2 = estimate_rho(f2).rho_estimate;
  double rho3 = estimate_rho(f3).rho_estimate;
  CHECK(std::abs(rho2 - 2.0 * rho1) < 0.05 * rho2);
  CHECK(std::abs(rho3 - 3.0 * rho1) < 0.05 * rho3);
}

TEST_CASE("rho is invariant under conjugation by an inner automorphism") {
  Automorphism f = pseudo_anosov();
  Automorphism inner = inner_automorphism(2, W("ab"));
  Automorphism conj = compose(compose(inner, f), inner.inverse());
  GrowthEstimate a = estimate_rho(f);
  GrowthEstimate b = estimate_rho(conj);
  CHECK(a.rho_estimate == b.rho_estimate);  // identical length sequences
}

TEST_CASE("rho is stable under a change of generating set") {
  // new basis u = X, v = XY, i.e. conjugate f by c: X -> X, Y -> XY
  Automorphism c(2, {W("a"), W("ab")}, {W("a"), W("Ab")});
  for (const Automorphism& f : {dehn_twist_x(), pseudo_anosov()}) {
    Automorphism g = compose(compose(c.inverse(), f), c);
    double r1 = estimate_rho(f).rho_estimate;
    double r2 = estimate_rho(g).rho_estimate;
    CHECK(std::abs(r1 - r2) <= 0.05 * std::max({r1, r2, 1e-9}));
  }
}
