#include "arcpow/real.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace arcpow {

namespace {
thread_local mpfr_prec_t tl_default_prec = 128;
}

mpfr_prec_t default_real_prec() { return tl_default_prec; }

void set_default_real_prec(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  tl_default_prec = bits;
}

std::string Real::str(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  std::vector<char> buf(significant_digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
  return std::string(buf.data());
}

#define ARCPOW_REAL_UNARY(name, fn)             \
  Real name(const Real& x) {                    \
    Real r = Real::with_prec(x.prec());         \
    fn(r.raw(), x.raw(), MPFR_RNDN);            \
    return r;                                   \
  }

ARCPOW_REAL_UNARY(abs, mpfr_abs)
ARCPOW_REAL_UNARY(sqrt, mpfr_sqrt)
ARCPOW_REAL_UNARY(exp, mpfr_exp)
ARCPOW_REAL_UNARY(log, mpfr_log)
ARCPOW_REAL_UNARY(sin, mpfr_sin)
ARCPOW_REAL_UNARY(cos, mpfr_cos)
ARCPOW_REAL_UNARY(atan, mpfr_atan)
#undef ARCPOW_REAL_UNARY

Real pow_ui(const Real& x, unsigned long e) {
  Real r = Real::with_prec(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::with_prec(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real const_pi(mpfr_prec_t bits) {
  Real r = Real::with_prec(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real arcsine(const Real& x) {
  Real ax = abs(x);
  if (ax > 1L) throw std::domain_error("arcsine: |x| > 1");
  if (ax == 1L) {
    Real half_pi = ldexp(const_pi(x.prec()), -1);
    return x.sign() > 0 ? half_pi : -half_pi;
  }
  return atan(x / sqrt(1L - x * x));
}

bool agree_to_bits(const Real& a, const Real& b, mpfr_prec_t bits) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return true;
  if (b.is_zero()) return diff.exponent() <= -static_cast<long>(bits);
  return diff.exponent() <= b.exponent() - static_cast<long>(bits);
}

}  // namespace arcpow
