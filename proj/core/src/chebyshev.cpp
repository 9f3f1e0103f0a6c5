#include "arcpow/chebyshev.hpp"

#include <stdexcept>

namespace arcpow {

namespace {

IntPoly cheb_recurrence(unsigned n, const IntPoly& p0, const IntPoly& p1) {
  if (n == 0) return p0;
  IntPoly prev = p0, cur = p1;
  for (unsigned m = 2; m <= n; ++m) {
    IntPoly next;
    next.coeff.assign(m + 1, BigInt(0));
    for (size_t i = 0; i < cur.coeff.size(); ++i) next.coeff[i + 1] = 2 * cur.coeff[i];
    for (size_t i = 0; i < prev.coeff.size(); ++i) next.coeff[i] -= prev.coeff[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

IntPoly chebyshev_t(unsigned n) {
  IntPoly t0{{BigInt(1)}};
  IntPoly t1{{BigInt(0), BigInt(1)}};
  return cheb_recurrence(n, t0, t1);
}

IntPoly chebyshev_u(unsigned n) {
  IntPoly u0{{BigInt(1)}};
  IntPoly u1{{BigInt(0), BigInt(2)}};
  return cheb_recurrence(n, u0, u1);
}

Real eval_poly(const IntPoly& p, const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working());
  if (p.is_zero()) return Real(0L);
  Real acc(p.coeff.back());
  for (size_t i = p.coeff.size() - 1; i-- > 0;) acc = acc * x + Real(p.coeff[i]);
  return acc;
}

BigInt eval_poly_int(const IntPoly& p, const BigInt& x) {
  BigInt acc(0);
  for (size_t i = p.coeff.size(); i-- > 0;) acc = acc * x + p.coeff[i];
  return acc;
}

std::array<Real, 4> lemma33_residuals(unsigned k, const Real& x,
                                      const PrecisionContext& ctx) {
  if (abs(x) > 1L) throw std::domain_error("lemma33_residuals: |x| > 1");
  // Chebyshev coefficients grow like (1+sqrt2)^deg, which conditions the
  // Horner sums; widen the working precision accordingly.
  const mpfr_prec_t wp = ctx.working() + 3 * (2 * k + 2);
  PrecisionScope scope(wp);
  PrecisionContext wide{wp, ctx.guard};
  Real xs = x.promoted(wp);
  Real a = arcsine(xs);
  Real s = sqrt(1L - xs * xs);
  const long sgn_k = (k % 2 == 0) ? 1 : -1;

  Real t2k = eval_poly(chebyshev_t(2 * k), xs, wide);
  Real t2k1 = eval_poly(chebyshev_t(2 * k + 1), xs, wide);
  Real u2k = eval_poly(chebyshev_u(2 * k), xs, wide);
  Real u2km1 = (k == 0) ? Real(0L) : eval_poly(chebyshev_u(2 * k - 1), xs, wide);

  std::array<Real, 4> r = {
      abs(cos(Real(static_cast<long>(2 * k)) * a) - sgn_k * t2k),
      abs(sin(Real(static_cast<long>(2 * k + 1)) * a) - sgn_k * t2k1),
      abs(sin(Real(static_cast<long>(2 * k)) * a) - (-sgn_k) * u2km1 * s),
      abs(cos(Real(static_cast<long>(2 * k + 1)) * a) - sgn_k * u2k * s)};
  return r;
}

}  // namespace arcpow
