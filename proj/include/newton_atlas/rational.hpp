#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace newton_atlas {

// Exact rational number. GMP keeps the value canonical (coprime, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Complex value used for critical values and numerical roots.
using ComplexValue = std::complex<double>;

inline bool is_finite(const ComplexValue& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Replaces -0.0 by 0.0 in both components so printing is stable.
inline ComplexValue normalize_zero(ComplexValue z) {
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return {re, im};
}

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

// Parses "a" or "a/b" with optional leading sign.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

// log2 of |r|, or -infinity for zero. Safe for values outside double range.
inline double log2_abs(const Rational& r) {
  if (r == 0) return -HUGE_VAL;
  long exp_num = 0;
  long exp_den = 0;
  double m_num = mpz_get_d_2exp(&exp_num, r.get_num_mpz_t());
  double m_den = mpz_get_d_2exp(&exp_den, r.get_den_mpz_t());
  return std::log2(std::fabs(m_num)) + static_cast<double>(exp_num) - std::log2(m_den) -
         static_cast<double>(exp_den);
}

// r * 2^shift computed exactly, then rounded to double.
inline double scaled_to_double(const Rational& r, long shift) {
  Rational scaled;
  if (shift >= 0) {
    mpq_mul_2exp(scaled.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_div_2exp(scaled.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return scaled.get_d();
}

namespace detail {

// Requires 0 < lo <= hi.
inline Rational simplest_positive(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return Rational(fl);
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_positive(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace detail

// Simplest rational (smallest denominator, then smallest |numerator|) in the
// closed interval [lo, hi]. Requires lo <= hi.
inline Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -detail::simplest_positive(-hi, -lo);
  return detail::simplest_positive(lo, hi);
}

// Best rational approximation with denominator <= max_den that lies within
// rel_tol * max(1, |x|) of x, if any.
inline bool rationalize(double x, long max_den, double rel_tol, Rational& out) {
  if (!std::isfinite(x)) return false;
  double slack = rel_tol * std::max(1.0, std::fabs(x));
  Rational lo(x - slack), hi(x + slack);
  Rational cand = simplest_rational_between(lo, hi);
  if (cand.get_den() > max_den) return false;
  out = cand;
  return true;
}

}  // namespace newton_atlas
