#include "doctest.h"

#include "arcpow/number_theory.hpp"
#include "arcpow/series.hpp"

using namespace arcpow;

namespace {

const PrecisionContext kCtx{128, 32};

Real wide(const Real& v) { return v.promoted(kCtx.working()); }

// Brute-force oracle for the four normalized binomial power sums.
Rational brute_zeta_sum(ZetaSumKind kind, unsigned s, unsigned ell) {
  Rational acc(0);
  if (kind == ZetaSumKind::k49 || kind == ZetaSumKind::k410) {
    for (unsigned k = 1; k <= ell; ++k) {
      Rational t(binomial(2 * ell, static_cast<long>(ell - k)), int_pow(BigInt(k), s));
      if (kind == ZetaSumKind::k410 && k % 2 == 0) t = -t;
      acc += t;
    }
    return acc / Rational(binomial(2 * ell, ell));
  }
  for (unsigned k = 0; k <= ell; ++k) {
    Rational t(binomial(2 * ell + 1, static_cast<long>(ell - k)),
               int_pow(BigInt(2 * k + 1), s));
    if (kind == ZetaSumKind::k412 && k % 2 == 1) t = -t;
    acc += t;
  }
  return acc / Rational(binomial(2 * ell + 1, ell + 1));
}

}  // namespace

TEST_CASE("central binomial ratio step") {
  CHECK(central_binomial_ratio_step(0) == Rational(1, 2));
  CHECK(central_binomial_ratio_step(1) == Rational(3, 4));
  CHECK(central_binomial_ratio_step(9) == Rational(19, 20));
}

TEST_CASE("series at x = 1: the two base sums") {
  PrecisionScope scope(kCtx.working());
  // x = 1 converges like 1/sqrt(K): run a fixed number of terms and check
  // that the tail bound brackets the known limits.
  Real tol("1e-40");
  SeriesSpec spec;
  spec.family = SeriesFamily::g_series;
  spec.p = 0;
  spec.m = 1;
  spec.x = Real(1L);
  SeriesResult r = sum_series(spec, tol, 100000, kCtx);
  Real half_pi = ldexp(const_pi(kCtx.working()), -1);
  CHECK_FALSE(r.converged);
  CHECK(wide(r.partial_sum) <= half_pi);
  CHECK(abs(wide(r.partial_sum) - half_pi) <= wide(r.tail_estimate));

  spec.m = 2;
  r = sum_series(spec, tol, 100000, kCtx);
  CHECK(wide(r.partial_sum) <= Real(1L));
  CHECK(abs(wide(r.partial_sum) - Real(1L)) <= wide(r.tail_estimate));
}

TEST_CASE("h series at x = 0 is zero") {
  PrecisionScope scope(kCtx.working());
  SeriesSpec spec;
  spec.family = SeriesFamily::h_series;
  spec.p = 1;
  spec.m = 1;
  spec.x = Real(0L);
  SeriesResult r = sum_series(spec, Real("1e-30"), 1000, kCtx);
  CHECK(r.converged);
  CHECK(r.partial_sum.is_zero());
}

TEST_CASE("zero-term run reports non-convergence without failing") {
  PrecisionScope scope(kCtx.working());
  SeriesSpec spec;
  spec.family = SeriesFamily::h_series;
  spec.p = 1;
  spec.m = 1;
  spec.x = ldexp(sqrt(Real(2L)), -1);
  SeriesResult r = sum_series(spec, Real("1e-30"), 0, kCtx);
  CHECK_FALSE(r.converged);
  CHECK(r.terms_used == 0);
}

TEST_CASE("catalog right-hand sides at the half-sqrt2 point") {
  PrecisionScope scope(kCtx.working());
  // 2 - sqrt(2)
  RhsValue v = corollary_rhs("2.17", IdentityParams{0, 0, 0, 0, 2, {}}, kCtx);
  REQUIRE(v.exact.has_value());
  CHECK(v.exact->degree() == 0);
  CHECK(v.exact->coeff(0) == QSqrt2{Rational(2), Rational(-1)});

  // 1 - pi/4
  v = corollary_rhs("2.18", IdentityParams{1, 0, 0, 0, 2, {}}, kCtx);
  REQUIRE(v.exact.has_value());
  CHECK(v.exact->coeff(0) == QSqrt2{Rational(1), Rational(0)});
  CHECK(v.exact->coeff(1) == QSqrt2{Rational(-1, 4), Rational(0)});

  // sqrt2 (pi - 2)/4
  v = corollary_rhs("2.19", IdentityParams{0, 0, 0, 0, 2, {}}, kCtx);
  REQUIRE(v.exact.has_value());
  CHECK(v.exact->coeff(0) == QSqrt2{Rational(0), Rational(-1, 2)});
  CHECK(v.exact->coeff(1) == QSqrt2{Rational(0), Rational(1, 4)});
}

TEST_CASE("direct sums at the half-sqrt2 point match their series") {
  PrecisionScope scope(kCtx.working());
  PiPoly odd0 = lupu_rhs(LupuFamily::odd, 0);
  CHECK(odd0.coeff(0) == QSqrt2{Rational(0), Rational(1)});  // sqrt 2
  PiPoly even1 = lupu_rhs(LupuFamily::even, 1);
  CHECK(even1.coeff(1) == QSqrt2{Rational(1, 2), Rational(0)});  // pi/2

  for (unsigned p = 0; p <= 2; ++p) {
    IdentityParams pr;
    pr.p = p;
    IdentityEval ev = evaluate_identity("lupu-odd", pr, Real("1e-25"), 200000, kCtx);
    CHECK(ev.lhs.converged);
    CHECK(ev.abs_diff <= wide(ev.lhs.tail_estimate) + ldexp(Real(1L), -100));
    if (p >= 1) {
      ev = evaluate_identity("lupu-even", pr, Real("1e-25"), 200000, kCtx);
      CHECK(ev.lhs.converged);
      CHECK(ev.abs_diff <= wide(ev.lhs.tail_estimate) + ldexp(Real(1L), -100));
    }
  }
}

TEST_CASE("finite zeta and beta sums, exact") {
  CHECK(zeta_beta_finite(ZetaSumKind::k49, 2, 1) == Rational(1, 2));
  for (unsigned s = 2; s <= 3; ++s)
    for (unsigned ell = 1; ell <= 6; ++ell)
      for (ZetaSumKind kind : {ZetaSumKind::k49, ZetaSumKind::k410,
                               ZetaSumKind::k411, ZetaSumKind::k412})
        CHECK(zeta_beta_finite(kind, s, ell) == brute_zeta_sum(kind, s, ell));
  CHECK_THROWS_AS(zeta_beta_finite(ZetaSumKind::k49, 1, 4), std::invalid_argument);
}

TEST_CASE("finite sums approach their limits") {
  PrecisionScope scope(kCtx.working());
  // s = 2 toward zeta(2) = pi^2/6: the deficit decays like sqrt(pi/ell),
  // about 0.0396 at ell = 2000
  Rational v = zeta_beta_finite(ZetaSumKind::k49, 2, 2000);
  Real target = pow_ui(const_pi(kCtx.working()), 2) / Real(6L);
  CHECK(abs(Real(v) - target) < Real("5e-2"));
  CHECK(abs(Real(zeta_beta_finite(ZetaSumKind::k49, 2, 500)) - target) >
        abs(Real(v) - target));
  // s = 3, alternating odd kind toward beta(3) = pi^3/32
  v = zeta_beta_finite(ZetaSumKind::k412, 3, 2000);
  Real target3 = pow_ui(const_pi(kCtx.working()), 3) / Real(32L);
  CHECK(abs(Real(v) - target3) < Real("1e-2"));
}

TEST_CASE("zeta and beta targets") {
  PrecisionScope scope(kCtx.working());
  Real pi = const_pi(kCtx.working());
  Real bound = ldexp(Real(1L), -120);
  CHECK(abs(wide(dirichlet_zeta(2, kCtx)) - pi * pi / Real(6L)) <= bound);
  CHECK(abs(wide(dirichlet_zeta(4, kCtx)) - pow_ui(pi, 4) / Real(90L)) <= bound);
  CHECK(abs(wide(dirichlet_beta(3, kCtx)) - pow_ui(pi, 3) / Real(32L)) <= bound);

  // zeta(3) against the inverse-central-binomial acceleration
  Real acc(0L);
  Real c(2L);  // C(2k,k) at k=1
  for (long k = 1; k <= 200; ++k) {
    Real t = Real(1L) / (pow_ui(Real(k), 3) * c);
    acc += (k % 2 == 1) ? t : -t;
    c = c * Real(2L * (2 * k + 1)) / Real(k + 1L);
  }
  Real zeta3 = ldexp(acc, 1) + ldexp(acc, -1);  // 5/2 * acc
  CHECK(abs(wide(dirichlet_zeta(3, kCtx)) - zeta3) <= bound);

  // Catalan against the log-augmented inverse-central-binomial series
  Real g(0L);
  c = Real(1L);
  for (long k = 0; k <= 200; ++k) {
    g += Real(1L) / (c * Real((2 * k + 1) * (2 * k + 1)));
    c = c * Real(2L * (2 * k + 1)) / Real(k + 1L);
  }
  Real catalan = Real(3L) / Real(8L) * g +
                 const_pi(kCtx.working()) / Real(8L) * log(2L + sqrt(Real(3L)));
  CHECK(abs(wide(dirichlet_beta(2, kCtx)) - catalan) <= bound);
}

TEST_CASE("partial fraction series against its closed comparator") {
  PrecisionScope scope(kCtx.working());
  Real pi = const_pi(kCtx.working());
  SeriesResult r = partial_fraction_series(0, 1, 2, Real(1L), Real("1e-8"), 3000000, kCtx);
  Real expect = ldexp(pi, -2) - Real(Rational(2, 3));
  CHECK(abs(wide(r.partial_sum) - expect) <= wide(r.tail_estimate));

  r = partial_fraction_series(1, 1, 2, Real(1L), Real("1e-8"), 3000000, kCtx);
  expect = pow_ui(pi, 3) / Real(96L) - Real(47L) * pi / Real(144L) + Real(Rational(20, 27));
  CHECK(abs(wide(r.partial_sum) - expect) <= wide(r.tail_estimate));

  r = partial_fraction_series(0, 1, 2, Real(0L), Real("1e-8"), 100, kCtx);
  CHECK(r.partial_sum.is_zero());
  CHECK_THROWS_AS(partial_fraction_series(0, 3, 3, Real(1L), Real("1e-8"), 10, kCtx),
                  std::invalid_argument);
}

TEST_CASE("exact 5.2 comparator at x = 1 equals the catalog constants") {
  PrecisionScope scope(kCtx.working());
  IdentityParams pr;
  pr.p = 1;
  pr.n = 1;
  pr.m = 2;
  pr.x = Real(1L);
  RhsValue v = corollary_rhs("5.2", pr, kCtx);
  REQUIRE(v.exact.has_value());
  // pi^3/96 - 47 pi/144 + 20/27
  CHECK(v.exact->coeff(3) == QSqrt2{Rational(1, 96), Rational(0)});
  CHECK(v.exact->coeff(1) == QSqrt2{Rational(-47, 144), Rational(0)});
  CHECK(v.exact->coeff(0) == QSqrt2{Rational(20, 27), Rational(0)});
}

TEST_CASE("pi limit sequences, spot checks") {
  // even n with p = 0 reproduces pi exactly (up to rounding)
  Real v = pi_limit_value_odd_family(0, 64, kCtx);
  PrecisionScope scope(kCtx.working());
  Real pi = const_pi(kCtx.working());
  CHECK(abs(wide(v) - pi) <= ldexp(Real(1L), -100));
  // p half-way: |value - pi^3| shrinks from n=16 to n=64
  Real e16 = abs(wide(pi_limit_value_odd_family(1, 16, kCtx)) - pow_ui(pi, 3));
  Real e64 = abs(wide(pi_limit_value_odd_family(1, 64, kCtx)) - pow_ui(pi, 3));
  CHECK(e64 < e16);
  // odd n: same story for the even family toward pi^2
  Real o17 = abs(wide(pi_limit_value_even_family(1, 17, kCtx)) - pow_ui(pi, 2));
  Real o65 = abs(wide(pi_limit_value_even_family(1, 65, kCtx)) - pow_ui(pi, 2));
  CHECK(o65 < o17);
  // odd n with p = 0 is exact as well: the alternating column sum collapses
  // to 16^l/((2l+1) C(2l,l)), cancelling the half-integer prefactor
  Real a17 = abs(wide(pi_limit_value_odd_family(0, 17, kCtx)) - pi);
  Real a65 = abs(wide(pi_limit_value_odd_family(0, 65, kCtx)) - pi);
  CHECK(a17 <= ldexp(Real(1L), -100));
  CHECK(a65 <= ldexp(Real(1L), -100));
  Real b17 = abs(wide(pi_limit_value_odd_family(1, 17, kCtx)) - pow_ui(pi, 3));
  Real b65 = abs(wide(pi_limit_value_odd_family(1, 65, kCtx)) - pow_ui(pi, 3));
  CHECK(b65 < b17);
  CHECK_THROWS_AS(pi_limit_value_even_family(0, 16, kCtx), std::invalid_argument);
}

TEST_CASE("general-x central binomial series with shifted denominator") {
  PrecisionScope scope(kCtx.working());
  for (long n : {0L, 2L, 4L}) {
    for (const char* xs : {"0.5", "0.9"}) {
      IdentityParams pr;
      pr.n = n;
      pr.x = Real(xs);
      IdentityEval ev = evaluate_identity("1.2", pr, Real("1e-28"), 100000, kCtx);
      CHECK(ev.lhs.converged);
      CHECK(ev.abs_diff <= wide(ev.lhs.tail_estimate) + ldexp(Real(1L), -100));
    }
  }
  IdentityParams pr;
  pr.n = 2;
  pr.x = Real(0L);
  IdentityEval ev = evaluate_identity("1.2", pr, Real("1e-28"), 10, kCtx);
  CHECK(ev.lhs.partial_sum.is_zero());
  CHECK(ev.rhs.value.is_zero());
}

TEST_CASE("x=1 bracket narrows as the term budget grows") {
  PrecisionScope scope(kCtx.working());
  SeriesSpec spec;
  spec.family = SeriesFamily::g_series;
  spec.p = 2;
  spec.m = 4;
  spec.x = Real(1L);
  Real tol("1e-60");
  Real prev_tail;
  bool have_prev = false;
  Real target = corollary_rhs("2.9", IdentityParams{2, 1, 0, 0, 2, {}}, kCtx)
                    .value.promoted(kCtx.working());
  for (long budget : {1000L, 4000L, 16000L, 64000L}) {
    SeriesResult r = sum_series(spec, tol, budget, kCtx);
    CHECK(abs(wide(r.partial_sum) - target) <= wide(r.tail_estimate));
    if (have_prev) CHECK(wide(r.tail_estimate) < prev_tail);
    prev_tail = wide(r.tail_estimate);
    have_prev = true;
  }
}

TEST_CASE("identity evaluation is deterministic") {
  IdentityParams pr;
  pr.p = 1;
  IdentityEval a = evaluate_identity("2.18", pr, Real("1e-20"), 100000, kCtx);
  IdentityEval b = evaluate_identity("2.18", pr, Real("1e-20"), 100000, kCtx);
  CHECK(a.lhs.partial_sum.str(40) == b.lhs.partial_sum.str(40));
  CHECK(a.rhs.value.str(40) == b.rhs.value.str(40));
  CHECK(a.lhs.terms_used == b.lhs.terms_used);
}

TEST_CASE("catalog is populated and rejects unknown ids") {
  CHECK(identity_catalog().size() >= 20);
  IdentityParams pr;
  CHECK_THROWS_AS(evaluate_identity("9.99", pr, Real("1e-6"), 10, kCtx),
                  std::invalid_argument);
}
