#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "fricke/error.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/word.hpp"

namespace fricke {

/// Variable list of the Fricke coordinate ring: (x, y, z) stands for
/// (tr X, tr Y, tr XY).
inline const std::vector<std::string>& fricke_variables() {
  static const std::vector<std::string> vars{"x", "y", "z"};
  return vars;
}

namespace detail {

// Letter order used for canonical cyclic representatives: positive
// letters first (X < X^-1 < Y < Y^-1), which keeps canonical forms of
// positive-word classes positive.
inline int trace_letter_rank(Letter g) {
  return 2 * (letter_index(g) - 1) + (g > 0 ? 0 : 1);
}

inline bool trace_rank_less(const std::vector<Letter>& a,
                            const std::vector<Letter>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int ra = trace_letter_rank(a[i]), rb = trace_letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

}  // namespace detail

/// Canonical representative of a word modulo cyclic rotation and
/// inversion: cyclically reduce, then take the least rotation of the
/// word or its inverse under the positive-first letter order. Distinct
/// words with equal SL2 trace functions obtained from these moves share
/// a key, which is what makes trace memoization effective.
inline Word trace_key(const Word& w) {
  Word cw = cyclically_reduce(w);
  if (cw.empty()) return cw;
  std::vector<Letter> best = cw.letters();
  for (const Word& cand : {cw, inverse(cw)}) {
    const auto& ls = cand.letters();
    std::vector<Letter> rot(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = 0; j < ls.size(); ++j) {
        rot[j] = ls[(i + j) % ls.size()];
      }
      if (detail::trace_rank_less(rot, best)) best = rot;
    }
  }
  return Word(std::move(best), Form::cyclically_reduced);
}

/// Memoizing engine for Fricke trace polynomials on F_2: for a word w,
/// trace_polynomial(w) is the unique P in Z[x,y,z] with
///   P(tr A, tr B, tr AB) = tr(image of w)
/// for every SL2 representation X -> A, Y -> B.
///
/// Reduction uses the SL2 trace identities
///   tr(U g^-1) = tr(U) tr(g) - tr(U g)        (negative-letter removal)
///   tr(g^2 S)  = tr(g) tr(g S) - tr(S)        (square splitting)
///   tr(U^k)    = tr(U) tr(U^(k-1)) - tr(U^(k-2))
/// applied in that order on the canonical representative. Every step
/// strictly decreases (min(#negative, #positive letters), length)
/// lexicographically, so the recursion terminates; each resulting
/// polynomial has degree at most the cyclic length of w.
///
/// One engine instance confines one memo table; instances are
/// independent, so concurrent computations each use their own.
class FrickeEngine {
 public:
  const Polynomial& trace_polynomial(const Word& w) {
    if (w.max_index() > 2) {
      throw validation_error("trace polynomials are implemented for rank 2");
    }
    return compute(trace_key(w));
  }

 private:
  const Polynomial& compute(const Word& key) {
    auto found = memo_.find(key.letters());
    if (found != memo_.end()) return found->second;
    Polynomial value = reduce_key(key);
    return memo_.emplace(key.letters(), std::move(value)).first->second;
  }

  const Polynomial& recurse(const Word& w) { return compute(trace_key(w)); }

  Polynomial reduce_key(const Word& key) {
    const auto& vars = fricke_variables();
    const std::vector<Letter>& ls = key.letters();
    const std::size_t n = ls.size();
    if (n == 0) return Polynomial::constant(vars, 2);  // tr(I) = 2
    if (n == 1) return Polynomial::variable(vars, letter_index(ls[0]) == 1 ? 0 : 1);
    if (n == 2 && ls[0] == 1 && ls[1] == 2) return Polynomial::variable(vars, 2);

    std::size_t negatives = 0;
    for (Letter g : ls) negatives += (g < 0) ? 1 : 0;
    // work on whichever of w, w^-1 has fewer negative letters
    const Word v = (2 * negatives <= n) ? key : inverse(key);
    const auto& vl = v.letters();

    auto rotated = [&](std::size_t start) {
      std::vector<Letter> out(vl.size());
      for (std::size_t j = 0; j < vl.size(); ++j) {
        out[j] = vl[(start + j) % vl.size()];
      }
      return out;
    };

    for (std::size_t i = n; i-- > 0;) {
      if (vl[i] >= 0) continue;
      // rotate the negative letter to the end: v ~ u . g^-1
      std::vector<Letter> rot = rotated((i + 1) % n);
      Word u(std::vector<Letter>(rot.begin(), rot.end() - 1), Form::raw);
      Word g(std::vector<Letter>{-rot.back()}, Form::reduced);
      return recurse(u) * recurse(g) - recurse(concat(u, g));
    }

    // all positive: split a cyclically adjacent repeated letter
    for (std::size_t i = 0; i < n; ++i) {
      if (vl[i] != vl[(i + 1) % n]) continue;
      std::vector<Letter> rot = rotated(i);  // starts g, g, ...
      Word g(std::vector<Letter>{rot[0]}, Form::reduced);
      Word gs(std::vector<Letter>(rot.begin() + 1, rot.end()), Form::reduced);
      Word s(std::vector<Letter>(rot.begin() + 2, rot.end()), Form::reduced);
      return recurse(g) * recurse(gs) - recurse(s);
    }

    // positive and cyclically square-free over two generators: (XY)^k
    Word head(std::vector<Letter>(vl.begin(), vl.begin() + 2), Form::reduced);
    Word tail(std::vector<Letter>(vl.begin() + 2, vl.end()), Form::reduced);
    Word tail2(std::vector<Letter>(vl.begin() + 4, vl.end()), Form::reduced);
    return recurse(head) * recurse(tail) - recurse(tail2);
  }

  std::map<std::vector<Letter>, Polynomial> memo_;
};

/// Convenience entry point with a per-thread memo table.
inline Polynomial trace_polynomial(const Word& w) {
  thread_local FrickeEngine engine;
  return engine.trace_polynomial(w);
}

}  // namespace fricke
