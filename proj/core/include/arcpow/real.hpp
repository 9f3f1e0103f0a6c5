#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "arcpow/rational.hpp"

namespace arcpow {

// Precision contract for every numeric entry point: `precision` is what the
// caller asked for, `guard` is the extra headroom computations run at.
struct PrecisionContext {
  mpfr_prec_t precision = 128;
  mpfr_prec_t guard = 32;
  mpfr_prec_t working() const { return precision + guard; }
};

// Thread-local default precision for newly created Real values.
mpfr_prec_t default_real_prec();
void set_default_real_prec(mpfr_prec_t bits);

// RAII: set the thread default precision, restore on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(default_real_prec()) {
    set_default_real_prec(bits);
  }
  ~PrecisionScope() { set_default_real_prec(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

// Value type over mpfr_t. Every value remembers its precision; binary
// operations produce results at the wider of the two operand precisions.
// Rounding is always to nearest, so results are deterministic for a fixed
// precision.
class Real {
 public:
  Real() { mpfr_init2(v_, default_real_prec()); mpfr_set_zero(v_, 1); }
  explicit Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  explicit Real(int x) : Real(static_cast<long>(x)) {}
  explicit Real(unsigned long x) : Real() { mpfr_set_ui(v_, x, MPFR_RNDN); }
  explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const BigInt& x) : Real() {
    mpfr_set_z(v_, x.backend().data(), MPFR_RNDN);
  }
  explicit Real(const Rational& x) : Real() {
    mpfr_set_q(v_, x.backend().data(), MPFR_RNDN);
  }
  // Parses a decimal string at the current default precision.
  explicit Real(const std::string& decimal) : Real() {
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
  }

  static Real with_prec(mpfr_prec_t bits) {
    Real r(nullptr_tag{});
    mpfr_init2(r.v_, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Exponent e with |x| in [2^(e-1), 2^e); only meaningful for nonzero x.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Fixed number of significant digits, scientific format; deterministic.
  std::string str(int significant_digits = 20) const;

  friend Real operator-(const Real& a) {
    Real r = Real::with_prec(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define ARCPOW_REAL_BINOP(op, fn)                                   \
  friend Real operator op(const Real& a, const Real& b) {          \
    Real r = Real::with_prec(std::max(a.prec(), b.prec()));        \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                               \
    return r;                                                      \
  }                                                                \
  friend Real operator op(const Real& a, long b) {                 \
    Real r = Real::with_prec(a.prec());                            \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                             \
    return r;                                                      \
  }                                                                \
  Real& operator op##=(const Real& b) {                            \
    if (prec() < b.prec()) *this = Real(*this).promoted(b.prec()); \
    fn(v_, v_, b.v_, MPFR_RNDN);                                   \
    return *this;                                                  \
  }

  ARCPOW_REAL_BINOP(+, mpfr_add)
  ARCPOW_REAL_BINOP(-, mpfr_sub)
  ARCPOW_REAL_BINOP(*, mpfr_mul)
  ARCPOW_REAL_BINOP(/, mpfr_div)
#undef ARCPOW_REAL_BINOP

  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b) {
    Real r = Real::with_prec(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r = Real::with_prec(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  Real promoted(mpfr_prec_t bits) const {
    Real r = Real::with_prec(std::max(bits, prec()));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  struct nullptr_tag {};
  explicit Real(nullptr_tag) {}
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real pow_ui(const Real& x, unsigned long e);
// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real const_pi(mpfr_prec_t bits);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

// arcsin at working precision as atan(x / sqrt(1 - x^2)); the endpoints
// x = +-1 map to +-pi/2. Throws std::domain_error for |x| > 1.
Real arcsine(const Real& x);

// True when a and b share their leading `bits` significant bits, measured as
// |a - b| <= 2^(exp(b) - bits). Both (near-)zero counts as agreement.
bool agree_to_bits(const Real& a, const Real& b, mpfr_prec_t bits);

// Evaluation policy for numeric entry points: run the computation at
// ctx.precision + guard and at + 2*guard; accept when the first
// ctx.precision bits agree, otherwise double the guard and retry.
template <typename F>
Real stable_eval(const F& compute, const PrecisionContext& ctx) {
  mpfr_prec_t guard = std::max<mpfr_prec_t>(ctx.guard, 16);
  Real best;
  for (int round = 0; round < 5; ++round) {
    Real v1, v2;
    {
      PrecisionScope scope(ctx.precision + guard);
      v1 = compute();
    }
    {
      PrecisionScope scope(ctx.precision + 2 * guard);
      v2 = compute();
    }
    best = v2;
    if (agree_to_bits(v1, v2, ctx.precision)) break;
    guard *= 2;
  }
  Real out = Real::with_prec(ctx.precision);
  mpfr_set(out.raw(), best.raw(), MPFR_RNDN);
  return out;
}

}  // namespace arcpow
