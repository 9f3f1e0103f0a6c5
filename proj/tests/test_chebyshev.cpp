#include "doctest.h"

#include "arcpow/chebyshev.hpp"

using namespace arcpow;

namespace {

bool coeffs_equal(const IntPoly& p, std::vector<long> expect) {
  if (p.coeff.size() != expect.size()) return false;
  for (size_t i = 0; i < expect.size(); ++i)
    if (p.coeff[i] != BigInt(expect[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("first and second kind small cases") {
  CHECK(coeffs_equal(chebyshev_t(0), {1}));
  CHECK(coeffs_equal(chebyshev_t(1), {0, 1}));
  CHECK(coeffs_equal(chebyshev_t(2), {-1, 0, 2}));
  CHECK(coeffs_equal(chebyshev_t(3), {0, -3, 0, 4}));
  CHECK(coeffs_equal(chebyshev_u(0), {1}));
  CHECK(coeffs_equal(chebyshev_u(1), {0, 2}));
  CHECK(coeffs_equal(chebyshev_u(2), {-1, 0, 4}));
  CHECK(coeffs_equal(chebyshev_u(3), {0, -4, 0, 8}));
}

TEST_CASE("parity and endpoint values up to 100") {
  for (unsigned n = 0; n <= 100; ++n) {
    IntPoly t = chebyshev_t(n), u = chebyshev_u(n);
    for (size_t j = 0; j < t.coeff.size(); ++j)
      if ((j % 2) != (n % 2)) CHECK(t.coeff[j] == BigInt(0));
    for (size_t j = 0; j < u.coeff.size(); ++j)
      if ((j % 2) != (n % 2)) CHECK(u.coeff[j] == BigInt(0));
    CHECK(eval_poly_int(t, BigInt(1)) == BigInt(1));
    CHECK(eval_poly_int(u, BigInt(1)) == BigInt(n + 1));
  }
}

TEST_CASE("recurrence polynomials match the cosine identity at nodes") {
  PrecisionContext ctx{128, 32};
  PrecisionScope scope(ctx.working());
  Real pi = const_pi(ctx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(ctx.precision) - 24));
  for (unsigned n = 1; n <= 30; ++n) {
    IntPoly t = chebyshev_t(n);
    for (unsigned i = 0; i <= n; ++i) {
      Real theta = pi * (2L * i + 1L) / Real(2L * (n + 1L));
      Real node = cos(theta);
      Real diff = abs(eval_poly(t, node, ctx) - cos(Real(static_cast<long>(n)) * theta));
      CHECK(diff <= bound);
    }
  }
}

TEST_CASE("eval examples") {
  PrecisionContext ctx{128, 32};
  PrecisionScope scope(ctx.working());
  CHECK(eval_poly(chebyshev_t(2), Real(1L), ctx) == Real(1L));
  CHECK(eval_poly(chebyshev_u(1), Real(Rational(1, 2)), ctx) == Real(1L));
  // T_3(3/10) = -792/1000 exactly
  Real v = eval_poly(chebyshev_t(3), Real(Rational(3, 10)), ctx);
  Real diff = abs(v - Real(Rational(-792, 1000)));
  CHECK(diff <= ldexp(Real(1L), -140));
}

TEST_CASE("arcsine composition residuals") {
  for (mpfr_prec_t prec : {static_cast<mpfr_prec_t>(64), static_cast<mpfr_prec_t>(128)}) {
    PrecisionContext ctx{prec, 32};
    PrecisionScope scope(ctx.working());
    Real bound = ldexp(Real(1L), -(static_cast<long>(prec) - 8));
    std::vector<Real> xs = {Real(0L), Real("0.25"), Real("-0.25"),
                            ldexp(sqrt(Real(2L)), -1), Real("0.99"), Real(1L),
                            Real(-1L)};
    for (unsigned k : {0u, 1u, 2u, 3u, 5u, 20u}) {
      for (const Real& x : xs) {
        auto r = lemma33_residuals(k, x, ctx);
        for (const Real& res : r) CHECK(res <= bound);
      }
    }
  }
}

TEST_CASE("k=3 at x=1: third identity reduces to cos(3 pi) vs -T_6(1)") {
  PrecisionContext ctx{128, 32};
  auto r = lemma33_residuals(3, Real(1L), ctx);
  CHECK(r[0] <= ldexp(Real(1L), -120));
}
