#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace arcpow {

// Exact coefficient field for everything symbolic: arbitrary-size integers
// and always-canonical rationals (lowest terms, positive denominator),
// backed by GMP.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

// 2^e as an exact rational, e may be negative.
inline Rational pow2_rational(long e) {
  Rational r(1);
  if (e >= 0) {
    r = Rational(BigInt(1) << e);
  } else {
    r = Rational(BigInt(1), BigInt(1) << (-e));
  }
  return r;
}

inline BigInt int_pow(BigInt base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  return Rational(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace arcpow
