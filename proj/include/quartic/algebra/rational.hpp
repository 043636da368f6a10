#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quartic::algebra {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// (n)!! for odd n >= -1, with (-1)!! = 1.
inline BigInt double_factorial(long n) {
  if (n <= 0) return BigInt(1);
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt pow_int(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Canonicalized fraction; the raw two-argument mpq_class constructor does not
// reduce, which breaks mpq_equal-based comparisons.
inline Rational frac(const BigInt& n, const BigInt& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline Rational frac(long n, long d) { return frac(BigInt(n), BigInt(d)); }

inline Rational pow_rat(const Rational& b, long e) {
  if (e >= 0) {
    Rational r(pow_int(b.get_num(), e), pow_int(b.get_den(), e));
    r.canonicalize();
    return r;
  }
  Rational r(pow_int(b.get_den(), -e), pow_int(b.get_num(), -e));
  r.canonicalize();
  return r;
}

// Generalized binomial coefficient binom(r, j) for rational r, integer j >= 0.
inline Rational binom_rat(const Rational& r, unsigned long j) {
  Rational acc(1);
  Rational f(r);
  for (unsigned long i = 0; i < j; ++i) {
    acc *= (f - Rational(static_cast<long>(i)));
    acc /= Rational(static_cast<long>(i + 1));
  }
  return acc;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Natural log of a positive rational, accurate to ~1 ulp even for huge values.
double log_rational(const Rational& q);
double log_bigint(const BigInt& n);

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);

}  // namespace quartic::algebra
