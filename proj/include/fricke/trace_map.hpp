#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fricke/automorphism.hpp"
#include "fricke/error.hpp"
#include "fricke/estimate.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/rng.hpp"
#include "fricke/sl2.hpp"
#include "fricke/trace.hpp"
#include "fricke/word.hpp"

namespace fricke {

/// Polynomial self-map of A^3 in the Fricke coordinates (x, y, z); the
/// induced action of a rank-2 automorphism on the SL2 character
/// variety.
struct TraceMap {
  std::array<Polynomial, 3> components;

  static TraceMap identity() {
    const auto& vars = fricke_variables();
    return {{Polynomial::variable(vars, 0), Polynomial::variable(vars, 1),
             Polynomial::variable(vars, 2)}};
  }

  int degree() const {
    int d = 0;
    for (const Polynomial& c : components) d = std::max(d, c.degree());
    return d;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const Polynomial& c : components) n += c.term_count();
    return n;
  }

  /// "(x, z, x*z - y)"
  std::string to_string() const {
    return "(" + components[0].to_string() + ", " + components[1].to_string() +
           ", " + components[2].to_string() + ")";
  }

  friend bool operator==(const TraceMap& a, const TraceMap& b) {
    return a.components == b.components;
  }
};

/// The map induced by f on trace coordinates: the Fricke polynomials of
/// f(X), f(Y) and f(XY).
inline TraceMap induced_trace_map(const Automorphism& f) {
  if (f.rank() != 2) {
    throw validation_error("character dynamics implemented for rank 2 only");
  }
  FrickeEngine engine;
  Word x(std::vector<Letter>{1}, Form::reduced);
  Word y(std::vector<Letter>{2}, Form::reduced);
  Word xy(std::vector<Letter>{1, 2}, Form::reduced);
  return {{engine.trace_polynomial(apply(f, x)),
           engine.trace_polynomial(apply(f, y)),
           engine.trace_polynomial(apply(f, xy))}};
}

/// Exact composition F after G (substitute G's components into F).
inline TraceMap compose_trace_map(const TraceMap& f, const TraceMap& g) {
  std::vector<Polynomial> args(g.components.begin(), g.components.end());
  return {{*f.components[0].substitute(args), *f.components[1].substitute(args),
           *f.components[2].substitute(args)}};
}

inline std::optional<TraceMap> compose_trace_map_bounded(
    const TraceMap& f, const TraceMap& g, std::size_t term_budget) {
  std::vector<Polynomial> args(g.components.begin(), g.components.end());
  std::array<Polynomial, 3> out = {
      Polynomial::zero(fricke_variables()), Polynomial::zero(fricke_variables()),
      Polynomial::zero(fricke_variables())};
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = f.components[i].substitute(args, term_budget);
    if (!c) return std::nullopt;
    out[i] = std::move(*c);
  }
  return TraceMap{std::move(out)};
}

/// Degrees d_n of the iterates of a trace map, d_0 = 1 for the
/// identity. The entropy estimate is the trailing-window slope of
/// log d_n, with the same sub-exponential cutoff as the word-growth
/// estimator.
struct DegreeSequence {
  std::vector<long> degrees;  // degrees[n] = deg of the n-th iterate
  double ealg_estimate = 0.0;
  long iterations_used = 0;
  bool budget_hit = false;
};

inline constexpr std::size_t kDefaultTermBudget = 2'000'000;
inline constexpr int kDefaultDegreeNMax = 30;

/// Iterates a trace map and records max component degrees. The n-th
/// iterate is produced by substituting iterate n-1 into the base map;
/// for self-composition the two substitution orders give the same
/// polynomials, and this direction keeps the outer polynomial small.
/// Iteration stops once n_max is reached or a composition would store
/// more than term_budget monomials.
inline DegreeSequence degree_sequence_of_map(const TraceMap& base, int n_max,
                                             std::size_t term_budget = kDefaultTermBudget) {
  DegreeSequence seq;
  seq.degrees.push_back(1);
  std::optional<TraceMap> current;
  for (int n = 1; n <= n_max; ++n) {
    std::optional<TraceMap> next =
        n == 1 ? std::optional<TraceMap>(base)
               : compose_trace_map_bounded(base, *current, term_budget);
    if (!next || next->term_count() > term_budget) {
      seq.budget_hit = true;
      break;
    }
    current = std::move(next);
    seq.degrees.push_back(current->degree());
  }
  seq.iterations_used = static_cast<long>(seq.degrees.size()) - 1;
  seq.ealg_estimate = trailing_window_rate(seq.degrees);
  return seq;
}

inline DegreeSequence degree_sequence(const Automorphism& f, int n_max = kDefaultDegreeNMax,
                                      std::size_t term_budget = kDefaultTermBudget) {
  return degree_sequence_of_map(induced_trace_map(f), n_max, term_budget);
}

/// Witness that the induced map really intertwines the automorphism
/// action: for random integer SL2 pairs (A, B), the induced map applied
/// to (tr A, tr B, tr AB) must equal the traces of the images of f(X),
/// f(Y), f(XY) under X -> A, Y -> B. Exact integer comparison.
struct SemiconjugacyReport {
  long trials = 0;
  long failures = 0;
  // first failing pair, if any
  std::optional<std::pair<Mat2z, Mat2z>> witness;
  bool passed() const { return failures == 0; }
};

inline SemiconjugacyReport semiconjugacy_check(const Automorphism& f, long trials,
                                               std::uint64_t seed) {
  if (trials < 1) throw validation_error("need at least one trial");
  TraceMap map = induced_trace_map(f);
  Word x(std::vector<Letter>{1}, Form::reduced);
  Word y(std::vector<Letter>{2}, Form::reduced);
  Word xy(std::vector<Letter>{1, 2}, Form::reduced);
  const Word fx = apply(f, x), fy = apply(f, y), fxy = apply(f, xy);
  Rng rng(seed);
  SemiconjugacyReport report;
  report.trials = trials;
  for (long t = 0; t < trials; ++t) {
    const Mat2z a = random_sl2(rng), b = random_sl2(rng);
    const std::vector<mpq_class> point{mpq_class(a.trace()), mpq_class(b.trace()),
                                       mpq_class((a * b).trace())};
    const bool ok =
        map.components[0].evaluate(point) == word_matrix(fx, a, b).trace() &&
        map.components[1].evaluate(point) == word_matrix(fy, a, b).trace() &&
        map.components[2].evaluate(point) == word_matrix(fxy, a, b).trace();
    if (!ok) {
      ++report.failures;
      if (!report.witness) report.witness = {a, b};
    }
  }
  return report;
}

/// Degree sequences of a map and of its conjugate by a polynomial
/// coordinate change, for checking that entropy estimates do not
/// depend on the affine embedding.
struct EmbeddingComparison {
  DegreeSequence original;
  DegreeSequence conjugated;
};

inline EmbeddingComparison embedding_invariance_harness(
    const Automorphism& f, const TraceMap& change, const TraceMap& change_inverse,
    int n_max, std::size_t term_budget = kDefaultTermBudget) {
  const TraceMap id = TraceMap::identity();
  if (compose_trace_map(change, change_inverse) != id ||
      compose_trace_map(change_inverse, change) != id) {
    throw validation_error("coordinate change and inverse do not compose to the identity");
  }
  const TraceMap base = induced_trace_map(f);
  const TraceMap conjugated =
      compose_trace_map(change_inverse, compose_trace_map(base, change));
  return {degree_sequence_of_map(base, n_max, term_budget),
          degree_sequence_of_map(conjugated, n_max, term_budget)};
}

}  // namespace fricke
