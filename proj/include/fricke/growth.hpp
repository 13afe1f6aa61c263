#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fricke/automorphism.hpp"
#include "fricke/error.hpp"
#include "fricke/estimate.hpp"
#include "fricke/intmatrix.hpp"
#include "fricke/word.hpp"

namespace fricke {

/// Result of estimating the word-growth spectral radius of an
/// automorphism over a set of seed words. The estimate is the maximum
/// of the per-seed trailing-window rates; it is an estimate over the
/// supplied seeds only, no claim is made that the supremum over the
/// whole group is attained.
struct GrowthEstimate {
  std::map<std::string, double> per_seed_rates;  // keyed by seed letter text
  double rho_estimate = 0.0;
  long iterations_used = 0;  // largest orbit index reached by any seed
  bool budget_hit = false;
  double lower_bound_abelian = 0.0;  // log spectral radius of the abelianization
};

/// Cyclically reduced lengths L_k = |f^k(seed)|_red for k = 0..m.
///
/// Iteration runs on cyclically reduced representatives: f maps
/// conjugacy classes to conjugacy classes, so |f(w')|_red is the same
/// for every conjugate w' of w, and keeping the representative short
/// keeps the computation small. m is capped by n_max and by the budget
/// on the total number of letters stored across the orbit.
inline std::vector<std::size_t> growth_sequence(const Automorphism& f,
                                                const Word& seed, int n_max,
                                                std::size_t budget,
                                                bool* budget_hit = nullptr) {
  Word w = cyclically_reduce(seed);
  if (w.empty()) throw validation_error("trivial seed");
  std::vector<std::size_t> lengths{w.size()};
  std::size_t total = w.size();
  if (budget_hit) *budget_hit = false;
  for (int k = 0; k < n_max; ++k) {
    Word next = cyclically_reduce(apply(f, w));
    if (total + next.size() > budget) {
      if (budget_hit) *budget_hit = true;
      break;
    }
    total += next.size();
    lengths.push_back(next.size());
    w = std::move(next);
  }
  return lengths;
}

/// Abelianized action: column i is the exponent-sum vector of the
/// image of x_i.
inline IntMatrix abelianization(const Automorphism& f) {
  IntMatrix m(f.rank());
  for (int i = 1; i <= f.rank(); ++i) {
    for (Letter g : f.image(i).letters()) {
      m.at(letter_index(g) - 1, i - 1) += letter_sign(g);
    }
  }
  return m;
}

inline constexpr std::size_t kDefaultGrowthBudget = 10'000'000;  // letters
inline constexpr int kDefaultGrowthNMax = 100;

/// Estimate the spectral radius of f from cyclically reduced word
/// growth over the given seeds (defaults to the generators when the
/// set is empty). Seeds that reduce to the identity are skipped; it is
/// an error if none survive. Deterministic for fixed inputs.
inline GrowthEstimate estimate_rho(const Automorphism& f,
                                   std::vector<Word> seeds = {},
                                   int n_max = kDefaultGrowthNMax,
                                   std::size_t budget = kDefaultGrowthBudget) {
  if (seeds.empty()) {
    for (int i = 1; i <= f.rank(); ++i) {
      seeds.emplace_back(std::vector<Letter>{static_cast<Letter>(i)},
                         Form::cyclically_reduced);
    }
  }
  GrowthEstimate est;
  bool any_valid = false;
  for (const Word& seed : seeds) {
    Word s = cyclically_reduce(seed);
    if (s.empty()) continue;
    any_valid = true;
    bool hit = false;
    std::vector<std::size_t> lengths = growth_sequence(f, s, n_max, budget, &hit);
    double rate = trailing_window_rate(lengths);
    est.per_seed_rates[s.str()] = rate;
    est.rho_estimate = std::max(est.rho_estimate, rate);
    est.iterations_used =
        std::max(est.iterations_used, static_cast<long>(lengths.size()) - 1);
    est.budget_hit = est.budget_hit || hit;
  }
  if (!any_valid) throw validation_error("all seeds trivial");
  est.lower_bound_abelian = std::log(spectral_radius(abelianization(f), 1e-9));
  return est;
}

}  // namespace fricke
