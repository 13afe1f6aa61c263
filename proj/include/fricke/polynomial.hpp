#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fricke/error.hpp"

namespace fricke {

/// Exponent vector, parallel to the variable list.
using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex with the
/// first variable most significant. Term maps sorted by this order give
/// reproducible serialization.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Degree of the zero polynomial; stands in for minus infinity.
inline constexpr int kZeroPolyDegree = -1;

/// Budget sentinel meaning "unbounded".
inline constexpr std::size_t kNoTermBudget = std::numeric_limits<std::size_t>::max();

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. No zero coefficients are ever stored. Values are
/// immutable in spirit: all arithmetic returns new polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, GradedLexLess>;

  explicit Polynomial(std::vector<std::string> variables)
      : vars_(std::move(variables)) {}

  static Polynomial zero(std::vector<std::string> variables) {
    return Polynomial(std::move(variables));
  }

  static Polynomial constant(std::vector<std::string> variables,
                             mpz_class value) {
    Polynomial p(std::move(variables));
    if (value != 0) p.terms_.emplace(Monomial(p.vars_.size(), 0), std::move(value));
    return p;
  }

  /// The monomial x_index (0-based into the variable list).
  static Polynomial variable(std::vector<std::string> variables,
                             std::size_t index) {
    Polynomial p(std::move(variables));
    if (index >= p.vars_.size()) throw validation_error("variable index out of range");
    Monomial m(p.vars_.size(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
  }

  static Polynomial monomial(std::vector<std::string> variables,
                             Monomial exponents, mpz_class coefficient) {
    Polynomial p(std::move(variables));
    if (exponents.size() != p.vars_.size()) {
      throw validation_error("exponent vector length mismatch");
    }
    for (int e : exponents) {
      if (e < 0) throw validation_error("negative exponent");
    }
    if (coefficient != 0) p.terms_.emplace(std::move(exponents), std::move(coefficient));
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Max total degree, or kZeroPolyDegree for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return kZeroPolyDegree;
    const Monomial& top = terms_.rbegin()->first;  // graded order: last is top
    return static_cast<int>(std::accumulate(top.begin(), top.end(), 0L));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) {
      mpz_class neg = -c;
      r.add_term(m, neg);
    }
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    auto r = multiply_bounded(a, b, kNoTermBudget);
    return std::move(*r);  // never empty without a budget
  }

  /// Product of a and b, or nullopt once the accumulator holds more
  /// than term_budget monomials (or the pairwise work would clearly
  /// dwarf it). Aborting mid-product is how degree-sequence iteration
  /// honors its term budget without first materializing a huge result.
  static std::optional<Polynomial> multiply_bounded(const Polynomial& a,
                                                    const Polynomial& b,
                                                    std::size_t term_budget);

  /// Exact evaluation at a rational point (one coordinate per variable).
  mpq_class evaluate(const std::vector<mpq_class>& point) const {
    if (point.size() != vars_.size()) {
      throw validation_error("evaluation point has wrong dimension");
    }
    // cache point powers up to the largest exponent per variable
    std::vector<std::vector<mpq_class>> powers(vars_.size(), {mpq_class(1)});
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
      mpq_class term(c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto& pw = powers[i];
        while (pw.size() <= static_cast<std::size_t>(m[i])) {
          pw.push_back(pw.back() * point[i]);
        }
        term *= pw[static_cast<std::size_t>(m[i])];
      }
      total += term;
    }
    return total;
  }

  /// Substitute args[i] for variable i, exactly. All args must share a
  /// variable list; the result lives over that list. Returns nullopt if
  /// the term budget is exceeded along the way.
  std::optional<Polynomial> substitute(const std::vector<Polynomial>& args,
                                       std::size_t term_budget = kNoTermBudget) const {
    if (args.size() != vars_.size()) {
      throw validation_error("substitution needs one argument per variable");
    }
    for (const Polynomial& a : args) args.front().check_compatible(a);
    // lazily extended power tables, one per substituted variable
    std::vector<std::vector<Polynomial>> powers;
    powers.reserve(args.size());
    for (const Polynomial& a : args) {
      powers.push_back({Polynomial::constant(a.variables(), 1), a});
    }
    Polynomial acc(args.front().variables());
    for (const auto& [m, c] : terms_) {
      Polynomial term = Polynomial::constant(args.front().variables(), c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= static_cast<std::size_t>(m[i])) {
          auto next = multiply_bounded(pw.back(), args[i], term_budget);
          if (!next) return std::nullopt;
          pw.push_back(std::move(*next));
        }
        auto prod = multiply_bounded(term, pw[static_cast<std::size_t>(m[i])], term_budget);
        if (!prod) return std::nullopt;
        term = std::move(*prod);
      }
      acc = acc + term;
      if (acc.term_count() > term_budget) return std::nullopt;
    }
    return acc;
  }

  /// Human-readable form, leading term first (descending graded-lex):
  /// "x^2*z - x*y - z", "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool negative = c < 0;
      mpz_class mag = negative ? mpz_class(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool is_const =
          std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
      if (mag != 1 || is_const) {
        out += mag.get_str();
        if (!is_const) out += "*";
      }
      bool first = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out += "*";
        first = false;
        out += vars_[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
      }
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& other) const {
    if (vars_ != other.vars_) {
      throw validation_error("polynomials over different variable lists");
    }
  }

  void add_term(const Monomial& m, const mpz_class& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

namespace detail {

// Packed-key fast path for products in at most three variables: each
// exponent fits in 21 bits, so a monomial packs into one uint64 and the
// accumulator can be a flat hash map.
inline constexpr int kPackBits = 21;
inline constexpr int kPackMaxExp = (1 << (kPackBits - 1)) - 1;  // headroom for sums

inline bool packable(const Polynomial& p) {
  if (p.variables().size() > 3) return false;
  for (const auto& [m, c] : p.terms()) {
    for (int e : m) {
      if (e > kPackMaxExp) return false;
    }
  }
  return true;
}

inline std::uint64_t pack(const Monomial& m) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    k |= static_cast<std::uint64_t>(m[i]) << (kPackBits * i);
  }
  return k;
}

inline Monomial unpack(std::uint64_t k, std::size_t nvars) {
  Monomial m(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) {
    m[i] = static_cast<int>((k >> (kPackBits * i)) & ((1u << kPackBits) - 1));
  }
  return m;
}

}  // namespace detail

inline std::optional<Polynomial> Polynomial::multiply_bounded(
    const Polynomial& a, const Polynomial& b, std::size_t term_budget) {
  a.check_compatible(b);
  Polynomial r(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;

  if (term_budget != kNoTermBudget) {
    // conservative pre-check: pairwise work proportional to |a||b|
    const std::size_t pairs = a.terms_.size() * b.terms_.size();
    if (a.terms_.size() != 0 && pairs / a.terms_.size() != b.terms_.size()) {
      return std::nullopt;  // overflow => certainly too big
    }
    if (pairs / 4096 > term_budget) return std::nullopt;
  }

  if (detail::packable(a) && detail::packable(b)) {
    std::unordered_map<std::uint64_t, mpz_class> acc;
    const double pair_est = static_cast<double>(a.terms_.size()) *
                            static_cast<double>(b.terms_.size());
    acc.reserve(static_cast<std::size_t>(
        std::min({pair_est, static_cast<double>(term_budget) + 1.0, 2.0e6})));
    std::size_t ops = 0;
    for (const auto& [ma, ca] : a.terms_) {
      const std::uint64_t ka = detail::pack(ma);
      for (const auto& [mb, cb] : b.terms_) {
        mpz_class& slot = acc[ka + detail::pack(mb)];
        mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        if ((++ops & 4095) == 0 && acc.size() > term_budget) return std::nullopt;
      }
      if (acc.size() > term_budget) return std::nullopt;
    }
    for (auto& [k, c] : acc) {
      if (c != 0) r.terms_.emplace(detail::unpack(k, a.vars_.size()), std::move(c));
    }
    return r;
  }

  for (const auto& [ma, ca] : a.terms_) {
    Monomial sum(ma.size());
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ma[i] + mb[i];
      auto [it, inserted] = r.terms_.try_emplace(sum, 0);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      if (it->second == 0) r.terms_.erase(it);
    }
    if (r.terms_.size() > term_budget) return std::nullopt;
  }
  return r;
}

}  // namespace fricke
