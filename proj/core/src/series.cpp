#include "arcpow/series.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "arcpow/number_theory.hpp"

namespace arcpow {

namespace {

bool is_unit_abs(const Real& x) { return abs(x) == 1L; }

// Classical central-binomial bounds used by every tail model:
//   1/sqrt(pi (k+1/2)) <= C(2k,k)/4^k <= 1/sqrt(pi k)   (k >= 1),
// so 4^k/C(2k,k) <= sqrt(2 pi k).
Real sqrt_pi(mpfr_prec_t wp) { return sqrt(const_pi(wp)); }

// Upper bound for lim_k G_p(k) = (pi/2)^(2p) / (2p)! with rounding slack.
Real g_limit_bound(unsigned p, mpfr_prec_t wp) {
  Real half_pi = ldexp(const_pi(wp), -1);
  Real b = pow_ui(half_pi, 2 * p) / Real(factorial(2 * p));
  return b + ldexp(b, -20);
}

// Upper bound for lim_k H_p(k) = (pi/2)^(2p-2) / (2p-1)!  (p >= 1).
Real h_limit_bound(unsigned p, mpfr_prec_t wp) {
  Real half_pi = ldexp(const_pi(wp), -1);
  Real b = pow_ui(half_pi, 2 * p - 2) / Real(factorial(2 * p - 1));
  return b + ldexp(b, -20);
}

}  // namespace

void SeriesSpec::validate() const {
  Real ax = abs(x);
  switch (family) {
    case SeriesFamily::g_series:
      if (m < 0) throw std::invalid_argument("g series: offset must be >= 0");
      if (ax > 1L) throw std::domain_error("g series: |x| <= 1 required");
      if (m == 0 && ax == 1L)
        throw std::domain_error("g series without denominator diverges at |x| = 1");
      break;
    case SeriesFamily::h_series:
      if (p < 1) throw std::invalid_argument("h series: p >= 1 required");
      if (m < 0) throw std::invalid_argument("h series: offset must be >= 0");
      if (ax > 1L) throw std::domain_error("h series: |x| <= 1 required");
      if (m == 0 && ax == 1L)
        throw std::domain_error("h series without outer denominator diverges at |x| = 1");
      break;
    case SeriesFamily::partial_fraction:
      if (m == m2) throw std::invalid_argument("partial fraction: offsets must differ");
      if (m < 0 || m2 < 0) throw std::invalid_argument("partial fraction: offsets >= 0");
      if (ax > 1L) throw std::domain_error("partial fraction: |x| <= 1 required");
      break;
    case SeriesFamily::eq12:
      if (m < 0 || m % 2 != 0) throw std::invalid_argument("eq12: n must be even and >= 0");
      if (ax > 1L) throw std::domain_error("eq12: |x| <= 1 required");
      break;
    case SeriesFamily::eq58_left:
    case SeriesFamily::eq58_right:
      break;
    case SeriesFamily::zeta_finite:
    case SeriesFamily::beta_finite:
      if (s < 2) throw std::invalid_argument("finite zeta/beta sums need s >= 2");
      if (index < 1) throw std::invalid_argument("finite zeta/beta sums need ell >= 1");
      break;
    case SeriesFamily::pi_limit_odd:
      if (index < 1) throw std::invalid_argument("pi limit: n >= 1 required");
      break;
    case SeriesFamily::pi_limit_even:
      if (p < 1) throw std::invalid_argument("even pi-limit family needs p >= 1");
      if (index < 1) throw std::invalid_argument("pi limit: n >= 1 required");
      break;
  }
}

Rational central_binomial_ratio_step(unsigned k) {
  return Rational(2 * k + 1, 2 * k + 2);
}

namespace {

struct Accumulator {
  explicit Accumulator(mpfr_prec_t wp) : sum(Real::with_prec(wp)), c(Real::with_prec(wp)) {}
  // Kahan step; terms are added at working precision.
  void add(const Real& t) {
    Real y = t - c;
    Real s2 = sum + y;
    c = (s2 - sum) - y;
    sum = s2;
  }
  Real sum, c;
};

SeriesResult sum_g_like(const SeriesSpec& spec, const Real& tol, long max_terms,
                        const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  PrecisionScope scope(wp);
  const bool pf = spec.family == SeriesFamily::partial_fraction;
  const long m = pf ? 2 : spec.m;
  const Real x = spec.x.promoted(wp);
  const bool at_one = is_unit_abs(x);
  const Real x2 = x * x;
  const Real ghat = g_limit_bound(spec.p, wp);
  const Real spi = sqrt_pi(wp);

  Accumulator acc(wp);
  Real b(1L);                         // C(2k,k)/4^k
  Real xp = pf ? pow_ui(x, 2) : (m > 0 ? pow_ui(x, static_cast<unsigned long>(m)) : Real(1L));
  HarmonicMirror g(HarmonicKind::G, spec.p, ctx);
  SeriesResult res{Real::with_prec(ctx.precision), 0, Real::with_prec(ctx.precision), false};

  long k = 0;
  // Entry value bounds the whole sum, so a zero-term run still reports an
  // honest tail estimate.
  Real tail;
  if (at_one) {
    tail = ldexp(ghat, 1);
  } else if (pf) {
    tail = ghat * abs(xp / (1L - x2)) / Real(2 + spec.m) / Real(2 + spec.m2);
  } else {
    tail = ghat * abs(xp / (1L - x2)) / Real(m > 0 ? m : 1);
  }
  while (res.terms_used < max_terms) {
    Real term = b * g.value(spec.p) * xp;
    if (pf) {
      term = term / Real(2 * k + 2 + spec.m) / Real(2 * k + 2 + spec.m2);
    } else if (m > 0) {
      term = term / Real(2 * k + m);
    }
    acc.add(term);
    ++res.terms_used;

    // advance generators to k+1
    b = b * Real(2 * k + 1) / Real(2 * k + 2);
    xp *= x2;
    g.advance();
    ++k;

    // Tail bound after K = k terms (first omitted index is k).  At |x| = 1
    // the sum over j >= k of j^(-3/2) (resp. j^(-5/2)) is bounded by the
    // integral from k-1, hence the shifted square roots.
    if (at_one) {
      if (k < 2) {
        tail = ghat;  // covers zeta(3/2)/(2 sqrt pi) < 0.74
      } else if (pf) {
        tail = ghat / (6L * spi) / (Real(k - 1) * sqrt(Real(k - 1)));
      } else {
        tail = ghat / (spi * sqrt(Real(k - 1)));
      }
    } else {
      Real geo = abs(xp / (1L - x2));  // sum_{j>=k} |x|^(2j+m)
      if (pf) {
        tail = b * ghat * geo / (Real(2 * k + spec.m) + 2L) / (Real(2 * k + spec.m2) + 2L);
      } else if (m > 0) {
        tail = b * ghat * geo / Real(2 * k + m);
      } else {
        tail = b * ghat * geo;
      }
    }
    if (tail <= tol.promoted(wp)) {
      res.converged = true;
      break;
    }
  }
  if (!res.converged && tail <= tol.promoted(wp)) res.converged = true;
  mpfr_set(res.partial_sum.raw(), acc.sum.raw(), MPFR_RNDN);
  mpfr_set(res.tail_estimate.raw(), tail.raw(), MPFR_RNDN);
  return res;
}

SeriesResult sum_h_like(const SeriesSpec& spec, const Real& tol, long max_terms,
                        const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  PrecisionScope scope(wp);
  const long m = spec.m;
  const Real x = spec.x.promoted(wp);
  const bool at_one = is_unit_abs(x);
  const Real x2 = x * x;
  const Real hhat = h_limit_bound(spec.p, wp);
  const Real two_pi = ldexp(const_pi(wp), 1);

  Accumulator acc(wp);
  Real invb(2L);  // 4^k/C(2k,k) at k = 1
  Real xp = pow_ui(x, static_cast<unsigned long>(2 + m));
  HarmonicMirror h(HarmonicKind::H, spec.p, ctx);
  SeriesResult res{Real::with_prec(ctx.precision), 0, Real::with_prec(ctx.precision), false};

  long k = 1;
  Real tail;
  if (at_one) {
    tail = ldexp(sqrt(two_pi) * hhat, 1);
  } else {
    tail = sqrt(two_pi) * hhat * abs(xp / (1L - x2)) / Real(m > 0 ? 2 + m : 2);
  }
  while (res.terms_used < max_terms) {
    Real term = invb * h.value(spec.p) * xp / Real(2 * k);
    if (m > 0) term = term / Real(2 * k + m);
    acc.add(term);
    ++res.terms_used;

    invb = invb * Real(2 * k + 2) / Real(2 * k + 1);
    xp *= x2;
    h.advance();
    ++k;

    // First omitted index is k; 4^j/C(2j,j) <= sqrt(2 pi j).
    if (at_one) {
      if (k < 2) {
        tail = sqrt(two_pi) * hhat * Real(2L);  // zeta(3/2)/4 slack included
      } else {
        tail = sqrt(two_pi) * hhat / ldexp(sqrt(Real(k - 1)), 1);
      }
    } else {
      Real geo = abs(xp / (1L - x2));  // sum_{j>=k} |x|^(2j+m)
      Real lead = sqrt(two_pi * Real(k)) * hhat / Real(2 * k);
      if (m > 0) lead = lead / Real(2 * k + m);
      tail = lead * geo;
    }
    if (tail <= tol.promoted(wp)) {
      res.converged = true;
      break;
    }
  }
  mpfr_set(res.partial_sum.raw(), acc.sum.raw(), MPFR_RNDN);
  mpfr_set(res.tail_estimate.raw(), tail.raw(), MPFR_RNDN);
  return res;
}

SeriesResult sum_eq58(bool left, const Real& tol, long max_terms,
                      const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working();
  PrecisionScope scope(wp);
  Accumulator acc(wp);
  SeriesResult res{Real::with_prec(ctx.precision), 0, Real::with_prec(ctx.precision), false};
  Real tail = left ? Real(5L) : Real(7L);  // whole-sum bounds
  if (left) {
    long k = 0;
    while (res.terms_used < max_terms) {
      acc.add(Real(4L) / (Real(2 * k + 1) * Real(2 * k + 1)));
      ++res.terms_used;
      ++k;
      // 4 sum_{j>=k} 1/(2j+1)^2 <= 4 sum 1/(2j(2j+2)) = 1/k (telescoping)
      tail = Real(1L) / Real(k);
      if (tail <= tol.promoted(wp)) { res.converged = true; break; }
    }
  } else {
    Real invb(2L);
    long j = 1;
    Real two_pi = ldexp(const_pi(wp), 1);
    while (res.terms_used < max_terms) {
      acc.add(invb / (Real(j) * Real(j)));
      ++res.terms_used;
      invb = invb * Real(2 * j + 2) / Real(2 * j + 1);
      ++j;
      tail = (j < 2) ? ldexp(sqrt(two_pi), 2)
                     : ldexp(sqrt(two_pi), 1) / sqrt(Real(j - 1));
      if (tail <= tol.promoted(wp)) { res.converged = true; break; }
    }
  }
  mpfr_set(res.partial_sum.raw(), acc.sum.raw(), MPFR_RNDN);
  mpfr_set(res.tail_estimate.raw(), tail.raw(), MPFR_RNDN);
  return res;
}

}  // namespace

SeriesResult sum_series(const SeriesSpec& spec, const Real& tolerance,
                        long max_terms, const PrecisionContext& ctx) {
  spec.validate();
  switch (spec.family) {
    case SeriesFamily::g_series:
    case SeriesFamily::partial_fraction:
      return sum_g_like(spec, tolerance, max_terms, ctx);
    case SeriesFamily::eq12: {
      SeriesSpec g = spec;
      g.family = SeriesFamily::g_series;
      g.p = 0;
      g.m = spec.m + 1;  // x^(2k+n+1)/(2k+n+1)
      return sum_g_like(g, tolerance, max_terms, ctx);
    }
    case SeriesFamily::h_series:
      return sum_h_like(spec, tolerance, max_terms, ctx);
    case SeriesFamily::eq58_left:
      return sum_eq58(true, tolerance, max_terms, ctx);
    case SeriesFamily::eq58_right:
      return sum_eq58(false, tolerance, max_terms, ctx);
    case SeriesFamily::zeta_finite:
    case SeriesFamily::beta_finite: {
      ZetaSumKind kind;
      if (spec.family == SeriesFamily::zeta_finite)
        kind = spec.alternating ? ZetaSumKind::k410 : ZetaSumKind::k49;
      else
        kind = spec.alternating ? ZetaSumKind::k412 : ZetaSumKind::k411;
      Rational v = zeta_beta_finite(kind, spec.s, static_cast<unsigned>(spec.index));
      PrecisionScope scope(ctx.working());
      SeriesResult r{Real(v), spec.index, Real(0L), true};
      return r;
    }
    case SeriesFamily::pi_limit_odd: {
      SeriesResult r{pi_limit_value_odd_family(spec.p, spec.index, ctx), spec.index,
                     Real(0L), true};
      return r;
    }
    case SeriesFamily::pi_limit_even: {
      SeriesResult r{pi_limit_value_even_family(spec.p, spec.index, ctx), spec.index,
                     Real(0L), true};
      return r;
    }
  }
  throw std::logic_error("sum_series: unreachable");
}

// ---------------------------------------------------------------------------
// Exact right-hand sides
// ---------------------------------------------------------------------------

namespace {

using Kind = TrigPartialPoly::Kind;

// Power sums over the binomial columns, exact.
Rational odd_power_sum(unsigned ell, unsigned s) {
  Rational acc(0);
  for (unsigned k = 0; k <= ell; ++k)
    acc += Rational(binomial(2 * ell + 1, static_cast<long>(ell - k)),
                    int_pow(BigInt(2 * k + 1), s));
  return acc;
}

Rational odd_power_sum_alt(unsigned ell, unsigned s) {
  Rational acc(0);
  for (unsigned k = 0; k <= ell; ++k) {
    Rational t(binomial(2 * ell + 1, static_cast<long>(ell - k)),
               int_pow(BigInt(2 * k + 1), s));
    acc += (k % 2 == 0) ? t : -t;
  }
  return acc;
}

Rational even_power_sum(unsigned ell, unsigned s) {
  Rational acc(0);
  for (unsigned k = 1; k <= ell; ++k)
    acc += Rational(binomial(2 * ell, static_cast<long>(ell - k)),
                    int_pow(BigInt(k), s));
  return acc;
}

Rational even_power_sum_alt(unsigned ell, unsigned s) {
  Rational acc(0);
  for (unsigned k = 1; k <= ell; ++k) {
    Rational t(binomial(2 * ell, static_cast<long>(ell - k)), int_pow(BigInt(k), s));
    acc += (k % 2 == 0) ? t : -t;
  }
  return acc;
}

Rational sign(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

PiPoly rhs_29(unsigned p, unsigned ell) {
  PiPoly out;
  const Rational inv4l(1, int_pow(BigInt(4), ell));
  for (unsigned j = 0; j < p; ++j) {
    Rational c = odd_power_sum(ell, 2 * p - 2 * j) * sign(j) *
                 pow2_rational(-static_cast<long>(2 * j + 1)) /
                 Rational(factorial(2 * j + 1));
    out.add(2 * j + 1, QSqrt2{sign(static_cast<int>(p) - 1) * inv4l * c, Rational(0)});
  }
  out.add(0, QSqrt2{sign(p) * inv4l * odd_power_sum_alt(ell, 2 * p + 1), Rational(0)});
  return out;
}

PiPoly rhs_210(unsigned p, unsigned ell) {
  PiPoly out;
  const Rational inv4lp(1, int_pow(BigInt(4), ell + p));
  for (unsigned j = 0; j < p; ++j) {
    Rational c = even_power_sum(ell, 2 * p - 2 * j) * sign(j) /
                 Rational(factorial(2 * j + 1));
    out.add(2 * j + 1, QSqrt2{sign(static_cast<int>(p) - 1) * inv4lp * c, Rational(0)});
  }
  out.add(2 * p + 1,
          QSqrt2{Rational(binomial(2 * ell, ell),
                          (BigInt(1) << (2 * ell + 2 * p + 1)) * factorial(2 * p + 1)),
                 Rational(0)});
  return out;
}

PiPoly rhs_211(unsigned p, unsigned ell) {
  PiPoly out;
  const Rational inv4l(1, int_pow(BigInt(4), ell));
  for (unsigned j = 0; j < p; ++j) {
    Rational c = odd_power_sum(ell, 2 * p - 2 * j) * sign(j) *
                 pow2_rational(-static_cast<long>(2 * j)) / Rational(factorial(2 * j));
    out.add(2 * j, QSqrt2{sign(static_cast<int>(p) - 1) * inv4l * c, Rational(0)});
  }
  return out;
}

PiPoly rhs_212(unsigned p, unsigned ell) {
  PiPoly out;
  const Rational scale = pow2_rational(-static_cast<long>(2 * ell + 2 * p - 1));
  for (unsigned j = 0; j < p; ++j) {
    Rational c = even_power_sum(ell, 2 * p - 2 * j) * sign(j) / Rational(factorial(2 * j));
    out.add(2 * j, QSqrt2{sign(static_cast<int>(p) - 1) * scale * c, Rational(0)});
  }
  out.add(2 * p, QSqrt2{Rational(binomial(2 * ell, ell),
                                 int_pow(BigInt(4), ell + p) * factorial(2 * p)),
                        Rational(0)});
  out.add(0, QSqrt2{sign(p) * scale * even_power_sum_alt(ell, 2 * p), Rational(0)});
  return out;
}

// sum_{j=0}^{2p} (-1)^(floor(j/2)) (pi/4)^j / j!  as the u (or v) column.
PiPoly half_quarter_exp_sum(unsigned jmax, bool shift, bool sqrt2_column) {
  // shift = false: sign (-1)^floor(j/2);  shift = true: (-1)^floor((j+1)/2)
  PiPoly out;
  for (unsigned j = 0; j <= jmax; ++j) {
    unsigned fl = shift ? (j + 1) / 2 : j / 2;
    Rational c = sign(fl) / (Rational(factorial(j)) * Rational(int_pow(BigInt(4), j)));
    out.add(j, sqrt2_column ? QSqrt2{Rational(0), c} : QSqrt2{c, Rational(0)});
  }
  return out;
}

PiPoly rhs_217(unsigned p) {
  PiPoly out = half_quarter_exp_sum(2 * p, /*shift=*/false, /*sqrt2=*/true)
                   .scaled(QSqrt2{sign(p + 1), Rational(0)});
  out.add(0, QSqrt2{sign(p) * Rational(2), Rational(0)});
  return out;
}

PiPoly rhs_218(unsigned p) {
  return half_quarter_exp_sum(2 * p - 1, /*shift=*/true, /*sqrt2=*/false)
      .scaled(QSqrt2{sign(static_cast<int>(p) - 1), Rational(0)});
}

// c_p(pi/2) and s_{p-1}(pi/2) as exact pi-polynomials.
PiPoly cos_partial_at_half_pi(int p) {
  PiPoly out;
  for (int j = 0; j <= p; ++j)
    out.add(2 * j, QSqrt2{sign(j) * pow2_rational(-2L * j) / Rational(factorial(2 * j)),
                          Rational(0)});
  return out;
}

PiPoly sin_partial_at_half_pi(int p) {
  PiPoly out;
  for (int j = 0; j <= p; ++j)
    out.add(2 * j + 1,
            QSqrt2{sign(j) * pow2_rational(-(2L * j + 1)) / Rational(factorial(2 * j + 1)),
                   Rational(0)});
  return out;
}

PiPoly rhs_219(unsigned p) {
  PiPoly out;
  out.add(2 * p + 1, QSqrt2{Rational(0), Rational(1, int_pow(BigInt(4), 2 * p + 1) *
                                                         factorial(2 * p + 1))});
  Rational c = sign(p + 1) * pow2_rational(-static_cast<long>(2 * p + 1));
  out = out + cos_partial_at_half_pi(static_cast<int>(p)).scaled(QSqrt2{Rational(0), c});
  return out;
}

PiPoly rhs_220(unsigned p) {
  PiPoly out;
  out.add(2 * p, QSqrt2{Rational(1, int_pow(BigInt(4), 2 * p) * factorial(2 * p)),
                        Rational(0)});
  Rational c = sign(p) * pow2_rational(-static_cast<long>(2 * p));
  out = out + sin_partial_at_half_pi(static_cast<int>(p) - 1).scaled(QSqrt2{c, Rational(0)});
  out.add(0, QSqrt2{-c, Rational(0)});
  return out;
}

Real cos_partial_value(int p, const Real& z) {
  Real acc(0L);
  for (int j = 0; j <= p; ++j) {
    Real t = pow_ui(z, 2 * j) / Real(factorial(2 * j));
    acc += (j % 2 == 0) ? t : -t;
  }
  return acc;
}

Real sin_partial_value(int p, const Real& z) {
  Real acc(0L);
  for (int j = 0; j <= p; ++j) {
    Real t = pow_ui(z, 2 * j + 1) / Real(factorial(2 * j + 1));
    acc += (j % 2 == 0) ? t : -t;
  }
  return acc;
}

}  // namespace

ClosedForm corollary_rhs_form(const std::string& id, unsigned p) {
  const int ip = static_cast<int>(p);
  ClosedForm f;
  if (id == "2.13") {
    // (-1)^(p-1) (s_{p-1}(a) x + c_p(a) s - 1)
    f += trig_partial_in_a(trig_partial(Kind::sin_partial, ip - 1), 1)
             .times_monomial(1, 0, 0, Rational(1));
    f += trig_partial_in_a(trig_partial(Kind::cos_partial, ip), 1)
             .times_monomial(0, 1, 0, Rational(1));
    f.add_term(PowKey{0, 0, 0}, Rational(-1));
    return f.scaled(sign(ip - 1));
  }
  if (id == "2.14") {
    // a^(2p+1)/(2(2p+1)!) - (-1)^p/2^(2p+2) (s_{p-1}(2a)(2x^2-1) + c_p(2a) 2x s)
    f.add_term(PowKey{0, 0, 2 * p + 1}, Rational(1, 2 * factorial(2 * p + 1)));
    ClosedForm inner;
    ClosedForm spoly = trig_partial_in_a(trig_partial(Kind::sin_partial, ip - 1), 2);
    inner += spoly.times_monomial(2, 0, 0, Rational(2));
    inner += spoly.scaled(Rational(-1));
    inner += trig_partial_in_a(trig_partial(Kind::cos_partial, ip), 2)
                 .times_monomial(1, 1, 0, Rational(2));
    f += inner.scaled(-sign(ip) * pow2_rational(-(2L * p + 2)));
    return f;
  }
  if (id == "2.15") {
    // (-1)^(p-1) (c_{p-1}(a) x - s_{p-1}(a) s)
    f += trig_partial_in_a(trig_partial(Kind::cos_partial, ip - 1), 1)
             .times_monomial(1, 0, 0, Rational(1));
    f += trig_partial_in_a(trig_partial(Kind::sin_partial, ip - 1), 1)
             .times_monomial(0, 1, 0, Rational(-1));
    return f.scaled(sign(ip - 1));
  }
  if (id == "2.16") {
    // a^(2p)/(2(2p)!) - (-1)^p/2^(2p+1) (c_{p-1}(2a)(2x^2-1) - s_{p-1}(2a) 2x s + 1)
    f.add_term(PowKey{0, 0, 2 * p}, Rational(1, 2 * factorial(2 * p)));
    ClosedForm inner;
    ClosedForm cpoly = trig_partial_in_a(trig_partial(Kind::cos_partial, ip - 1), 2);
    inner += cpoly.times_monomial(2, 0, 0, Rational(2));
    inner += cpoly.scaled(Rational(-1));
    inner += trig_partial_in_a(trig_partial(Kind::sin_partial, ip - 1), 2)
                 .times_monomial(1, 1, 0, Rational(-2));
    inner.add_term(PowKey{0, 0, 0}, Rational(1));
    f += inner.scaled(-sign(ip) * pow2_rational(-(2L * p + 1)));
    return f;
  }
  throw std::invalid_argument("corollary_rhs_form: unknown id " + id);
}

PiPoly lupu_rhs(LupuFamily family, unsigned p) {
  PiPoly out;
  if (family == LupuFamily::odd) {
    // sqrt(2)/(2p)! * (pi/4)^(2p)
    out.add(2 * p, QSqrt2{Rational(0),
                          Rational(1, factorial(2 * p) * int_pow(BigInt(4), 2 * p))});
  } else {
    if (p < 1) throw std::invalid_argument("lupu_rhs: even family needs p >= 1");
    // 2/(2p-1)! * (pi/4)^(2p-1)
    out.add(2 * p - 1,
            QSqrt2{Rational(2, factorial(2 * p - 1) * int_pow(BigInt(4), 2 * p - 1)),
                   Rational(0)});
  }
  return out;
}

Rational zeta_beta_finite(ZetaSumKind kind, unsigned s, unsigned ell) {
  if (s < 2) throw std::invalid_argument("zeta_beta_finite: s >= 2 required");
  if (ell < 1) throw std::invalid_argument("zeta_beta_finite: ell >= 1 required");
  switch (kind) {
    case ZetaSumKind::k49:
      return even_power_sum(ell, s) / Rational(binomial(2 * ell, ell));
    case ZetaSumKind::k410:
      return -even_power_sum_alt(ell, s) / Rational(binomial(2 * ell, ell));
    case ZetaSumKind::k411:
      return odd_power_sum(ell, s) / Rational(binomial(2 * ell + 1, ell + 1));
    case ZetaSumKind::k412:
      return odd_power_sum_alt(ell, s) / Rational(binomial(2 * ell + 1, ell + 1));
  }
  throw std::logic_error("zeta_beta_finite: unreachable");
}

// ---------------------------------------------------------------------------
// Limit sequences
// ---------------------------------------------------------------------------

namespace {

// Binomial-column ratios and their weighted power sums at working precision.
// even variant: r_k = C(2l, l-k)/C(2l, l), terms 1/k^s, k = 1..l
// odd variant:  rho_k = C(2l+1, l-k)/C(2l+1, l+1), terms 1/(2k+1)^s, k = 0..l
struct ColumnSums {
  std::map<unsigned, Real> plain;  // exponent -> sum
  std::map<unsigned, Real> alt;    // alternating variant, sign (-1)^k (odd) / (-1)^(k-1) (even)
};

ColumnSums column_sums_even(unsigned ell, const std::vector<unsigned>& exps,
                            const std::vector<unsigned>& alt_exps) {
  ColumnSums cs;
  for (unsigned e : exps) cs.plain.emplace(e, Real(0L));
  for (unsigned e : alt_exps) cs.alt.emplace(e, Real(0L));
  Real r(1L);
  for (unsigned k = 1; k <= ell; ++k) {
    r = r * Real(static_cast<long>(ell) - static_cast<long>(k) + 1L) /
        Real(static_cast<long>(ell + k));
    for (auto& [e, acc] : cs.plain) acc += r / pow_ui(Real(static_cast<long>(k)), e);
    for (auto& [e, acc] : cs.alt) {
      Real t = r / pow_ui(Real(static_cast<long>(k)), e);
      acc += (k % 2 == 1) ? t : -t;  // (-1)^(k-1)
    }
  }
  return cs;
}

ColumnSums column_sums_odd(unsigned ell, const std::vector<unsigned>& exps,
                           const std::vector<unsigned>& alt_exps) {
  ColumnSums cs;
  for (unsigned e : exps) cs.plain.emplace(e, Real(0L));
  for (unsigned e : alt_exps) cs.alt.emplace(e, Real(0L));
  Real rho(1L);
  for (unsigned k = 0; k <= ell; ++k) {
    if (k > 0)
      rho = rho * Real(static_cast<long>(ell) - static_cast<long>(k) + 1L) /
            Real(static_cast<long>(ell + k) + 1L);
    for (auto& [e, acc] : cs.plain) acc += rho / pow_ui(Real(2L * k + 1L), e);
    for (auto& [e, acc] : cs.alt) {
      Real t = rho / pow_ui(Real(2L * k + 1L), e);
      acc += (k % 2 == 0) ? t : -t;  // (-1)^k
    }
  }
  return cs;
}

// C(2l+1, l+1) / C(2l+1, l+1/2): tends to 1; carries the pi of the
// half-integer central binomial.
Real odd_n_correction(unsigned ell, mpfr_prec_t wp) {
  RationalOverPi half = half_integer_central_binomial(ell);
  return Real(binomial(2 * ell + 1, static_cast<long>(ell + 1))) * const_pi(wp) /
         Real(half.coefficient);
}

std::vector<unsigned> j_exponents(unsigned p) {
  std::vector<unsigned> v;
  for (unsigned j = 0; j < p; ++j) v.push_back(2 * p - 2 * j);
  return v;
}

}  // namespace

Real pi_limit_value_odd_family(unsigned p, long n, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("pi_limit_value: n >= 1");
  auto compute = [&]() {
    const mpfr_prec_t wp = default_real_prec();
    Real pi = const_pi(wp);
    if (n % 2 == 0) {
      const unsigned ell = static_cast<unsigned>(n / 2);
      ColumnSums cs = column_sums_even(ell, j_exponents(p), {});
      Real acc = pow_ui(pi, 2 * p + 1) / Real(2L * p + 1L);
      Real js(0L);
      for (unsigned j = 0; j < p; ++j) {
        Real t = cs.plain.at(2 * p - 2 * j) * pow_ui(pi, 2 * j + 1) /
                 Real(factorial(2 * j + 1));
        js += (j % 2 == 0) ? t : -t;
      }
      Real c = ldexp(Real(factorial(2 * p)), 1);  // 2 (2p)!
      acc += (p % 2 == 1) ? c * js : -(c * js);   // (-1)^(p-1)
      return acc;
    }
    const unsigned ell = static_cast<unsigned>((n - 1) / 2);
    ColumnSums cs = column_sums_odd(ell, j_exponents(p), {2 * p + 1});
    Real half_pi = ldexp(pi, -1);
    Real js(0L);
    for (unsigned j = 0; j < p; ++j) {
      Real t = cs.plain.at(2 * p - 2 * j) * pow_ui(half_pi, 2 * j + 1) /
               Real(factorial(2 * j + 1));
      js += (j % 2 == 0) ? t : -t;
    }
    Real f = ldexp(Real(factorial(2 * p)), static_cast<long>(2 * p + 2));  // 2^(2p+2) (2p)!
    Real y = (p % 2 == 1) ? f * js : -(f * js);
    Real alt_term = f * cs.alt.at(2 * p + 1);
    y += (p % 2 == 0) ? alt_term : -alt_term;
    return y * odd_n_correction(ell, wp);
  };
  return stable_eval(compute, ctx);
}

Real pi_limit_value_even_family(unsigned p, long n, const PrecisionContext& ctx) {
  if (p < 1) throw std::invalid_argument("pi_limit_value: even family needs p >= 1");
  if (n < 1) throw std::invalid_argument("pi_limit_value: n >= 1");
  auto compute = [&]() {
    const mpfr_prec_t wp = default_real_prec();
    Real pi = const_pi(wp);
    if (n % 2 == 0) {
      const unsigned ell = static_cast<unsigned>(n / 2);
      ColumnSums cs = column_sums_even(ell, j_exponents(p), {2 * p});
      Real acc = pow_ui(pi, 2 * p) / Real(2L * p);
      Real js(0L);
      for (unsigned j = 0; j < p; ++j) {
        Real t = cs.plain.at(2 * p - 2 * j) * pow_ui(pi, 2 * j) / Real(factorial(2 * j));
        js += (j % 2 == 0) ? t : -t;
      }
      js += cs.alt.at(2 * p);
      Real c = ldexp(Real(factorial(2 * p - 1)), 1);  // 2 (2p-1)!
      acc += (p % 2 == 1) ? c * js : -(c * js);
      return acc;
    }
    const unsigned ell = static_cast<unsigned>((n - 1) / 2);
    ColumnSums cs = column_sums_odd(ell, j_exponents(p), {});
    Real half_pi = ldexp(pi, -1);
    Real js(0L);
    for (unsigned j = 0; j < p; ++j) {
      Real t = cs.plain.at(2 * p - 2 * j) * pow_ui(half_pi, 2 * j) / Real(factorial(2 * j));
      js += (j % 2 == 0) ? t : -t;
    }
    Real f = ldexp(Real(factorial(2 * p - 1)), static_cast<long>(2 * p + 1));  // 2^(2p+1)(2p-1)!
    Real w = (p % 2 == 1) ? f * js : -(f * js);
    return w * odd_n_correction(ell, wp);
  };
  return stable_eval(compute, ctx);
}

SeriesResult partial_fraction_series(unsigned p, long n, long m, const Real& x,
                                     const Real& tolerance, long max_terms,
                                     const PrecisionContext& ctx) {
  if (n == m) throw std::invalid_argument("partial_fraction_series: n != m required");
  SeriesSpec spec;
  spec.family = SeriesFamily::partial_fraction;
  spec.p = p;
  spec.m = n;
  spec.m2 = m;
  spec.x = x;
  return sum_series(spec, tolerance, max_terms, ctx);
}

// ---------------------------------------------------------------------------
// zeta / beta targets
// ---------------------------------------------------------------------------

namespace {

// Euler-Maclaurin for the Hurwitz zeta at integer s >= 2 and rational a.
Real hurwitz_zeta_em(unsigned s, const Rational& a, mpfr_prec_t wp) {
  const unsigned long N = 64 + static_cast<unsigned long>(wp) / 2;
  Real av(a);
  Real acc(0L);
  for (unsigned long k = 0; k < N; ++k)
    acc += 1L / pow_ui(Real(static_cast<long>(k)) + av, s);
  Real na = Real(static_cast<long>(N)) + av;
  acc += 1L / (Real(static_cast<long>(s) - 1L) * pow_ui(na, s - 1));
  acc += ldexp(1L / pow_ui(na, s), -1);
  // correction terms B_{2j}/(2j)! * (s)_(2j-1) * (N+a)^(1-s-2j)
  Real poch(1L);
  Real na2 = na * na;
  Real napow = pow_ui(na, s + 1);
  Real eps = ldexp(Real(1L), -static_cast<long>(wp) - 16);
  for (unsigned j = 1; j < 300; ++j) {
    if (j == 1) {
      poch = Real(static_cast<long>(s));
    } else {
      poch = poch * Real(static_cast<long>(s + 2 * j - 3)) *
             Real(static_cast<long>(s + 2 * j - 2));
      napow = napow * na2;
    }
    Real term = Real(bernoulli(2 * j)) / Real(factorial(2 * j)) * poch / napow;
    acc += term;
    if (abs(term) < eps * max(Real(1L), abs(acc))) break;
  }
  return acc;
}

}  // namespace

Real dirichlet_zeta(unsigned s, const PrecisionContext& ctx) {
  if (s < 2) throw std::invalid_argument("dirichlet_zeta: s >= 2 required");
  if (s % 2 == 0) return zeta_closed_form_even(s / 2).value(ctx);
  auto compute = [&]() { return hurwitz_zeta_em(s, Rational(1), default_real_prec()); };
  return stable_eval(compute, ctx);
}

Real dirichlet_beta(unsigned s, const PrecisionContext& ctx) {
  if (s < 1) throw std::invalid_argument("dirichlet_beta: s >= 1 required");
  if (s == 1) return ldexp(const_pi(ctx.working()), -2);
  if (s % 2 == 1) return beta_closed_form_odd((s - 1) / 2).value(ctx);
  auto compute = [&]() {
    const mpfr_prec_t wp = default_real_prec();
    Real d = hurwitz_zeta_em(s, Rational(1, 4), wp) - hurwitz_zeta_em(s, Rational(3, 4), wp);
    return ldexp(d, -2L * static_cast<long>(s));
  };
  return stable_eval(compute, ctx);
}

PiPoly zeta_closed_form_even(unsigned n) {
  if (n < 1) throw std::invalid_argument("zeta_closed_form_even: n >= 1");
  // zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_{2n} / (2 (2n)!)
  Rational c = sign(static_cast<int>(n) - 1) * pow2_rational(2L * n - 1) * bernoulli(2 * n) /
               Rational(factorial(2 * n));
  PiPoly out;
  out.add(2 * n, QSqrt2{c, Rational(0)});
  return out;
}

PiPoly beta_closed_form_odd(unsigned n) {
  // beta(2n+1) = (-1)^n pi^(2n+1) E_{2n} / (2^(2n+2) (2n)!)
  Rational c = sign(n) * Rational(euler_number(2 * n)) *
               pow2_rational(-(2L * n + 2)) / Rational(factorial(2 * n));
  PiPoly out;
  out.add(2 * n + 1, QSqrt2{c, Rational(0)});
  return out;
}

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

namespace {

Real sqrt2_over_2() { return ldexp(sqrt(Real(2L)), -1); }

Real require_x(const IdentityParams& pr, const char* id) {
  if (!pr.x) throw std::invalid_argument(std::string(id) + ": parameter x required");
  return *pr.x;
}

}  // namespace

RhsValue corollary_rhs(const std::string& id, const IdentityParams& pr,
                       const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working());
  const mpfr_prec_t wp = ctx.working();
  auto exact = [&](PiPoly p) {
    RhsValue r{std::move(p), Real(0L)};
    r.value = r.exact->value(ctx);
    return r;
  };
  auto numeric = [&](Real v) { return RhsValue{std::nullopt, std::move(v)}; };

  if (id == "2.9") return exact(rhs_29(pr.p, static_cast<unsigned>(pr.ell)));
  if (id == "2.10") {
    if (pr.ell < 1) throw std::invalid_argument("2.10: ell >= 1 required");
    return exact(rhs_210(pr.p, static_cast<unsigned>(pr.ell)));
  }
  if (id == "2.11") {
    if (pr.p < 1) throw std::invalid_argument("2.11: p >= 1 required");
    return exact(rhs_211(pr.p, static_cast<unsigned>(pr.ell)));
  }
  if (id == "2.12") {
    if (pr.p < 1 || pr.ell < 1) throw std::invalid_argument("2.12: p, ell >= 1 required");
    return exact(rhs_212(pr.p, static_cast<unsigned>(pr.ell)));
  }
  if (id == "2.13" || id == "2.14" || id == "2.15" || id == "2.16") {
    if ((id == "2.15" || id == "2.16") && pr.p < 1)
      throw std::invalid_argument(id + ": p >= 1 required");
    return numeric(eval_closed_form(corollary_rhs_form(id, pr.p), require_x(pr, id.c_str()), ctx));
  }
  if (id == "2.17") return exact(rhs_217(pr.p));
  if (id == "2.18") {
    if (pr.p < 1) throw std::invalid_argument("2.18: p >= 1 required");
    return exact(rhs_218(pr.p));
  }
  if (id == "2.19") return exact(rhs_219(pr.p));
  if (id == "2.20") {
    if (pr.p < 1) throw std::invalid_argument("2.20: p >= 1 required");
    return exact(rhs_220(pr.p));
  }
  if (id == "2.23") {
    Real pi = const_pi(wp);
    Real rad = 2L - sqrt(Real(2L));                // 2 - sqrt2
    Real quarter_pi = ldexp(pi, -2);
    Real eighth_pi = ldexp(pi, -3);
    Real inner = pow_ui(eighth_pi, 2 * pr.p + 1) / Real(factorial(2 * pr.p + 1));
    Real trig = cos_partial_value(static_cast<int>(pr.p), quarter_pi) -
                sin_partial_value(static_cast<int>(pr.p) - 1, quarter_pi);
    Real corr = sqrt(Real(2L)) / pow_ui(Real(4L), pr.p + 1) * trig;
    inner = (pr.p % 2 == 0) ? inner - corr : inner + corr;
    return numeric(Real(4L) / (rad * sqrt(rad)) * inner);
  }
  if (id == "2.24") {
    if (pr.p < 1) throw std::invalid_argument("2.24: p >= 1 required");
    Real pi = const_pi(wp);
    Real s2 = sqrt(Real(2L));
    Real quarter_pi = ldexp(pi, -2);
    Real eighth_pi = ldexp(pi, -3);
    Real v = (2L + s2) * pow_ui(eighth_pi, 2 * pr.p) / Real(factorial(2 * pr.p));
    Real trig = cos_partial_value(static_cast<int>(pr.p) - 1, quarter_pi) +
                sin_partial_value(static_cast<int>(pr.p) - 1, quarter_pi);
    Real t2 = (1L + s2) / pow_ui(Real(4L), pr.p) * trig;
    Real t3 = (2L + s2) / pow_ui(Real(4L), pr.p);
    if (pr.p % 2 == 0)
      v = v + t2 - t3;
    else
      v = v - t2 + t3;
    return numeric(v);
  }
  if (id == "5.2") {
    if (pr.n == pr.m) throw std::invalid_argument("5.2: n != m required");
    Real x = require_x(pr, "5.2");
    const unsigned q = 2 * pr.p + 1;
    if (abs(x).is_zero()) return numeric(Real(0L));
    Rational denom = Rational(pr.n - pr.m) * Rational(factorial(q));
    if (abs(x) == 1L && x.sign() > 0) {
      PiPoly top = specialize_pi(arcsine_power_integral(static_cast<unsigned>(pr.n), q),
                                 PiPoint::one)
                       .scaled(QSqrt2{Rational(pr.n + 1) / denom, Rational(0)}) -
                   specialize_pi(arcsine_power_integral(static_cast<unsigned>(pr.m), q),
                                 PiPoint::one)
                       .scaled(QSqrt2{Rational(pr.m + 1) / denom, Rational(0)});
      return exact(top);
    }
    Real in = Real(pr.n + 1) *
                  eval_closed_form(arcsine_power_integral(static_cast<unsigned>(pr.n), q), x, ctx) /
                  pow_ui(x, static_cast<unsigned long>(pr.n)) -
              Real(pr.m + 1) *
                  eval_closed_form(arcsine_power_integral(static_cast<unsigned>(pr.m), q), x, ctx) /
                  pow_ui(x, static_cast<unsigned long>(pr.m));
    return numeric(in / Real(denom));
  }
  if (id == "1.2" || id == "1.3") {
    long n = pr.n;
    if (n < 0 || n % 2 != 0) throw std::invalid_argument(id + ": even n >= 0 required");
    if (id == "1.3" || (pr.x && abs(*pr.x) == 1L)) {
      PiPoly out;
      out.add(1, QSqrt2{Rational(binomial(n, n / 2), BigInt(1) << (n + 1)), Rational(0)});
      return exact(out);
    }
    Real x = require_x(pr, "1.2");
    if (x.is_zero()) return numeric(Real(0L));  // empty sum; the (2x)^-n form is singular
    Real a = arcsine(x);
    Real srt = sqrt(1L - x * x);
    Real inner(0L);
    Real twox = ldexp(x, 1);
    for (long j = 0; 2 * j <= n - 2; ++j)
      inner += pow_ui(twox, 2 * j + 1) /
               (Real(2 * j + 1) * Real(binomial(2 * j, j)));
    Real v = (a - ldexp(srt * inner, -1)) * Real(binomial(n, n / 2)) /
             pow_ui(twox, static_cast<unsigned long>(n));
    return numeric(v);
  }
  if (id == "5.8") {
    PiPoly out;
    out.add(2, QSqrt2{Rational(1, 2), Rational(0)});
    return exact(out);
  }
  if (id == "lupu-odd") return exact(lupu_rhs(LupuFamily::odd, pr.p));
  if (id == "lupu-even") return exact(lupu_rhs(LupuFamily::even, pr.p));
  if (id == "4.9") return numeric(dirichlet_zeta(pr.s, ctx));
  if (id == "4.10")
    return numeric((1L - ldexp(Real(1L), 1 - static_cast<long>(pr.s))) *
                   dirichlet_zeta(pr.s, ctx));
  if (id == "4.11")
    return numeric((1L - ldexp(Real(1L), -static_cast<long>(pr.s))) *
                   dirichlet_zeta(pr.s, ctx));
  if (id == "4.12") return numeric(dirichlet_beta(pr.s, ctx));
  throw std::invalid_argument("unknown identity id: " + id);
}

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog = {
      {"1.2", "n (even), x", "central binomial over (2k+n+1), general x"},
      {"1.3", "n (even)", "central binomial over (2k+n+1) at x=1; value C(n,n/2) pi/2^(n+1)"},
      {"2.9", "p, ell", "G_p series, even offset 2ell+2, x=1"},
      {"2.10", "p, ell>=1", "G_p series, odd offset 2ell+1, x=1"},
      {"2.11", "p>=1, ell", "H_p series, odd offset 2ell+1, x=1"},
      {"2.12", "p>=1, ell>=1", "H_p series, even offset 2ell, x=1"},
      {"2.13", "p, x", "G_p series, offset 2, general x"},
      {"2.14", "p, x", "G_p series, offset 3, general x"},
      {"2.15", "p>=1, x", "H_p series, offset 1, general x"},
      {"2.16", "p>=1, x", "H_p series, offset 2, general x"},
      {"2.17", "p", "G_p series, offset 2, at x = sqrt2/2"},
      {"2.18", "p>=1", "H_p series, offset 1, at x = sqrt2/2"},
      {"2.19", "p", "G_p series, offset 3, at x = sqrt2/2"},
      {"2.20", "p>=1", "H_p series, offset 2, at x = sqrt2/2"},
      {"2.23", "p", "G_p series, offset 3, at the pi/8 point"},
      {"2.24", "p>=1", "H_p series, offset 2, at the pi/8 point"},
      {"4.9", "s>=2, ell", "binomial-weighted power sum toward zeta(s)"},
      {"4.10", "s>=2, ell", "alternating variant toward (1-2^(1-s)) zeta(s)"},
      {"4.11", "s>=2, ell", "odd-denominator variant toward (1-2^(-s)) zeta(s)"},
      {"4.12", "s>=2, ell", "alternating odd variant toward beta(s)"},
      {"5.2", "p, n, m, x", "partial-fraction series with two offsets"},
      {"5.8", "(none)", "two routes to pi^2/2: odd reciprocal squares vs inverse central binomials"},
      {"lupu-odd", "p", "direct G_p sum at x = sqrt2/2 (no denominator)"},
      {"lupu-even", "p>=1", "direct H_p sum at x = sqrt2/2 (single 1/k)"},
  };
  return catalog;
}

IdentityEval evaluate_identity(const std::string& id, const IdentityParams& pr,
                               const Real& tolerance, long max_terms,
                               const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working());
  const mpfr_prec_t wp = ctx.working();
  SeriesSpec spec;
  Real scale(1L);
  Real s22 = sqrt2_over_2();

  if (id == "1.2" || id == "1.3") {
    spec.family = SeriesFamily::eq12;
    spec.m = pr.n;
    spec.x = (id == "1.3") ? Real(1L) : require_x(pr, id.c_str());
    // the generator sums x^(2k+n+1)/(2k+n+1); the identity's left side
    // carries x^(2k+1), so undo the extra x^n
    if (pr.n > 0 && !spec.x.is_zero())
      scale = 1L / pow_ui(spec.x, static_cast<unsigned long>(pr.n));
  } else if (id == "2.9") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = 2 * pr.ell + 2;
  } else if (id == "2.10") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = 2 * pr.ell + 1;
  } else if (id == "2.11") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = 2 * pr.ell + 1;
  } else if (id == "2.12") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = 2 * pr.ell;
  } else if (id == "2.13" || id == "2.14") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = (id == "2.13") ? 2 : 3;
    spec.x = require_x(pr, id.c_str());
  } else if (id == "2.15" || id == "2.16") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = (id == "2.15") ? 1 : 2;
    spec.x = require_x(pr, id.c_str());
  } else if (id == "2.17") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = 2;
    spec.x = s22;
    scale = Real(2L);
  } else if (id == "2.18") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = 1;
    spec.x = s22;
    scale = sqrt(Real(2L));
  } else if (id == "2.19") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = 3;
    spec.x = s22;
    scale = ldexp(sqrt(Real(2L)), 1);
  } else if (id == "2.20") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = 2;
    spec.x = s22;
    scale = Real(2L);
  } else if (id == "2.23") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = 3;
    spec.x = ldexp(sqrt(2L - sqrt(Real(2L))), -1);
    scale = 1L / pow_ui(spec.x, 3);
  } else if (id == "2.24") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = 2;
    spec.x = ldexp(sqrt(2L - sqrt(Real(2L))), -1);
    scale = 1L / (spec.x * spec.x);
  } else if (id == "5.2") {
    spec.family = SeriesFamily::partial_fraction;
    spec.p = pr.p;
    spec.m = pr.n;
    spec.m2 = pr.m;
    spec.x = require_x(pr, "5.2");
  } else if (id == "5.8") {
    spec.family = SeriesFamily::eq58_left;
  } else if (id == "lupu-odd") {
    spec.family = SeriesFamily::g_series;
    spec.p = pr.p;
    spec.m = 0;
    spec.x = s22;
  } else if (id == "lupu-even") {
    spec.family = SeriesFamily::h_series;
    spec.p = pr.p;
    spec.m = 0;
    spec.x = s22;
    scale = Real(2L);
  } else if (id == "4.9" || id == "4.10" || id == "4.11" || id == "4.12") {
    spec.family = (id == "4.9" || id == "4.10") ? SeriesFamily::zeta_finite
                                                : SeriesFamily::beta_finite;
    spec.alternating = (id == "4.10" || id == "4.12");
    spec.s = pr.s;
    spec.index = pr.ell;
  } else {
    throw std::invalid_argument("unknown identity id: " + id);
  }

  IdentityEval ev{sum_series(spec, tolerance, max_terms, ctx),
                  corollary_rhs(id, pr, ctx), Real(0L)};
  if (!(scale == Real(1L))) {
    ev.lhs.partial_sum = (ev.lhs.partial_sum.promoted(wp) * scale).promoted(ctx.precision);
    ev.lhs.tail_estimate =
        (ev.lhs.tail_estimate.promoted(wp) * abs(scale)).promoted(ctx.precision);
  }
  ev.abs_diff = abs(ev.lhs.partial_sum.promoted(wp) - ev.rhs.value.promoted(wp));
  return ev;
}

}  // namespace arcpow
