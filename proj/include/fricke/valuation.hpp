#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "fricke/error.hpp"

namespace fricke {

/// Additive valuation exponent; nullopt plays the role of +infinity
/// (the valuation of zero). min(v.value_or(0), 0) is the usual way
/// downstream code consumes it.
using ValExp = std::optional<long>;

/// p-adic valuation of a rational: the exponent of p in q.
inline ValExp vp(const mpq_class& q, const mpz_class& p) {
  if (p < 2) throw validation_error("valuation prime must be >= 2");
  if (q == 0) return std::nullopt;
  mpz_class stripped;
  const long vn = static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
  const long vd = static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

/// Element of Q(i), kept in lowest terms componentwise.
struct GaussianRational {
  mpq_class re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Which valuation a certificate runs over: the p-adic valuation of Q,
/// or the (a+bi)-adic valuation of Q(i) at a split prime p = a^2 + b^2.
struct ValuationSpec {
  enum class Kind { rational_prime, gaussian_split_prime };

  Kind kind;
  mpz_class p;
  mpz_class a, b;  // gaussian kind only

  static ValuationSpec rational(mpz_class prime) {
    check_prime(prime);
    return {Kind::rational_prime, std::move(prime), 0, 0};
  }

  static ValuationSpec gaussian(mpz_class prime, mpz_class a, mpz_class b) {
    check_prime(prime);
    if (a * a + b * b != prime) {
      throw validation_error("need a^2 + b^2 = p for a split Gaussian prime");
    }
    return {Kind::gaussian_split_prime, std::move(prime), std::move(a), std::move(b)};
  }

 private:
  static void check_prime(const mpz_class& p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
      throw validation_error(p.get_str() + " is not prime");
    }
  }
};

/// Exponent of the prime (a+bi) in a Gaussian rational, computed by
/// clearing denominators and repeated exact division in Z[i]:
/// (u+vi)/(a+bi) = ((u+vi)(a-bi))/p is integral iff p divides both
/// components of the numerator.
inline ValExp gaussian_valuation(const GaussianRational& z, const ValuationSpec& spec) {
  if (spec.kind != ValuationSpec::Kind::gaussian_split_prime) {
    throw validation_error("gaussian_valuation needs a gaussian-split-prime spec");
  }
  if (z.is_zero()) return std::nullopt;

  auto order = [&spec](mpz_class u, mpz_class v) {
    long count = 0;
    while (u != 0 || v != 0) {
      mpz_class nu = u * spec.a + v * spec.b;
      mpz_class nv = v * spec.a - u * spec.b;
      if (nu % spec.p != 0 || nv % spec.p != 0) break;
      u = nu / spec.p;
      v = nv / spec.p;
      ++count;
    }
    return count;
  };

  mpz_class den;
  mpz_lcm(den.get_mpz_t(), z.re.get_den().get_mpz_t(), z.im.get_den().get_mpz_t());
  const mpz_class u = z.re.get_num() * (den / z.re.get_den());
  const mpz_class v = z.im.get_num() * (den / z.im.get_den());
  return order(u, v) - order(den, 0);
}

/// Valuation of a rational under either kind of spec. Note that for a
/// split Gaussian prime the restriction of the (a+bi)-adic valuation to
/// Q coincides with the p-adic one.
inline ValExp valuation(const mpq_class& q, const ValuationSpec& spec) {
  return vp(q, spec.p);
}

}  // namespace fricke
