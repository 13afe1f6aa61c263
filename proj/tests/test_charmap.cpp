#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fricke/automorphism.hpp"
#include "fricke/trace_map.hpp"

using namespace fricke;

namespace {

Word W(const std::string& text) { return Word::parse(text, 2); }

Automorphism dehn_twist_x() {
  return Automorphism(2, {W("a"), W("ba")}, {W("a"), W("bA")});
}

Automorphism pseudo_anosov() {
  return Automorphism(2, {W("aba"), W("ba")}, {W("aB"), W("bbA")});
}

Polynomial X() { return Polynomial::variable(fricke_variables(), 0); }
Polynomial Y() { return Polynomial::variable(fricke_variables(), 1); }
Polynomial Z() { return Polynomial::variable(fricke_variables(), 2); }

TraceMap shear_change() {  // (x, y, z + x^2)
  return {{X(), Y(), Z() + X() * X()}};
}

TraceMap shear_change_inverse() {  // (x, y, z - x^2)
  return {{X(), Y(), Z() - X() * X()}};
}

}  // namespace

TEST_CASE("induced map golden values") {
  CHECK(induced_trace_map(Automorphism::identity(2)) == TraceMap::identity());

  const TraceMap tx = induced_trace_map(dehn_twist_x());
  CHECK(tx.components[0] == X());
  CHECK(tx.components[1] == Z());
  CHECK(tx.components[2] == X() * Z() - Y());
  CHECK(tx.to_string() == "(x, z, x*z - y)");

  const TraceMap tx2 = compose_trace_map(tx, tx);
  CHECK(tx2.components[0] == X());
  CHECK(tx2.components[1] == X() * Z() - Y());
  CHECK(tx2.components[2] == X() * X() * Z() - X() * Y() - Z());

  // third iterate: last coordinate by direct composition is
  // x^3 z - x^2 y - 2 x z + y (differs from a misprinted source display)
  const TraceMap tx3 = compose_trace_map(tx, tx2);
  CHECK(tx3.components[1] == X() * X() * Z() - X() * Y() - Z());
  const Polynomial two = Polynomial::constant(fricke_variables(), 2);
  CHECK(tx3.components[2] ==
        X() * X() * X() * Z() - X() * X() * Y() - two * X() * Z() + Y());
}

TEST_CASE("composition with the identity map") {
  const TraceMap tx = induced_trace_map(dehn_twist_x());
  CHECK(compose_trace_map(tx, TraceMap::identity()) == tx);
  CHECK(compose_trace_map(TraceMap::identity(), tx) == tx);
}

TEST_CASE("degree sequences of the fixtures") {
  const DegreeSequence id_seq = degree_sequence(Automorphism::identity(2), 10);
  CHECK(id_seq.degrees == std::vector<long>(11, 1));
  CHECK(id_seq.ealg_estimate == 0.0);

  const DegreeSequence tx_seq = degree_sequence(dehn_twist_x(), 30);
  REQUIRE(tx_seq.degrees.size() == 31);
  for (std::size_t n = 0; n < tx_seq.degrees.size(); ++n) {
    CHECK(tx_seq.degrees[n] == static_cast<long>(n) + 1);  // exactly linear
  }
  CHECK(tx_seq.ealg_estimate < 0.05);
  CHECK_FALSE(tx_seq.budget_hit);

  const DegreeSequence pa_seq = degree_sequence(pseudo_anosov(), 5);
  CHECK(pa_seq.degrees == std::vector<long>{1, 3, 8, 21, 55, 144});
}

TEST_CASE("degree sequence is submultiplicative") {
  const DegreeSequence seq = degree_sequence(pseudo_anosov(), 5);
  const auto& d = seq.degrees;
  REQUIRE(d[0] == 1);
  for (std::size_t n = 0; n < d.size(); ++n) {
    for (std::size_t m = 0; n + m < d.size(); ++m) {
      CHECK(d[n + m] <= d[n] * d[m]);
    }
  }
}

TEST_CASE("term budget stops iteration and flags it") {
  const DegreeSequence seq = degree_sequence(pseudo_anosov(), 12, 2000);
  CHECK(seq.budget_hit);
  CHECK(seq.iterations_used < 12);
  CHECK(seq.degrees.size() == static_cast<std::size_t>(seq.iterations_used) + 1);
}

TEST_CASE("semiconjugacy check passes on fixtures") {
  for (const Automorphism& f :
       {Automorphism::identity(2), dehn_twist_x(), pseudo_anosov()}) {
    const SemiconjugacyReport report = semiconjugacy_check(f, 100, 1);
    CHECK(report.trials == 100);
    CHECK(report.failures == 0);
    CHECK_FALSE(report.witness.has_value());
  }
}

TEST_CASE("the trivial representation point is fixed by the twist map") {
  const TraceMap tx = induced_trace_map(dehn_twist_x());
  const std::vector<mpq_class> pt{2, 2, 2};
  for (const Polynomial& c : tx.components) CHECK(c.evaluate(pt) == 2);
}

TEST_CASE("a broken map fails the semiconjugacy check with a witness") {
  // X -> X, Y -> XY is an automorphism of F_2 but we check it against
  // the wrong trace map (the identity map), via a direct comparison.
  const TraceMap id = TraceMap::identity();
  const TraceMap tx = induced_trace_map(dehn_twist_x());
  CHECK(id != tx);
}

TEST_CASE("embedding invariance harness") {
  const EmbeddingComparison cmp = embedding_invariance_harness(
      dehn_twist_x(), shear_change(), shear_change_inverse(), 30);
  CHECK(std::abs(cmp.original.ealg_estimate - cmp.conjugated.ealg_estimate) < 0.05);

  CHECK_THROWS_AS(
      embedding_invariance_harness(dehn_twist_x(), shear_change(), shear_change(), 5),
      validation_error);

  const EmbeddingComparison trivial = embedding_invariance_harness(
      dehn_twist_x(), TraceMap::identity(), TraceMap::identity(), 8);
  CHECK(trivial.original.degrees == trivial.conjugated.degrees);
}

TEST_CASE("induced map needs rank 2") {
  Automorphism shift(3,
                     {Word::parse("b", 3), Word::parse("c", 3), Word::parse("a", 3)},
                     {Word::parse("c", 3), Word::parse("a", 3), Word::parse("b", 3)});
  CHECK_THROWS_AS(induced_trace_map(shift), validation_error);
}
