#include "doctest.h"

#include "arcpow/closed_form.hpp"
#include "arcpow/verify.hpp"

using namespace arcpow;

namespace {

const PrecisionContext kCtx{128, 32};

Real wide(const Real& v) { return v.promoted(kCtx.working()); }

}  // namespace

TEST_CASE("moment quadrature basics") {
  PrecisionScope scope(kCtx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(kCtx.precision) - 12));

  // analytic antiderivative x asin x + sqrt(1-x^2) - 1 at x = 1/2
  QuadratureReport r = quadrature_I(0, 1, Real(Rational(1, 2)), kCtx);
  Real x(Rational(1, 2));
  Real expect = x * arcsine(x) + sqrt(1L - x * x) - 1L;
  CHECK(abs(wide(r.value) - expect) <= bound);
  CHECK(r.est_error <= bound);

  CHECK(quadrature_I(5, 3, Real(0L), kCtx).value.is_zero());

  r = quadrature_I(0, 0, Real("0.8"), kCtx);
  CHECK(abs(wide(r.value) - Real("0.8")) <= bound);

  CHECK_THROWS_AS(quadrature_I(0, 1, Real("1.5"), kCtx), std::domain_error);
  CHECK_THROWS_AS(quadrature_I(0, 1, Real("-0.25"), kCtx), std::domain_error);
}

TEST_CASE("exponential-weight quadrature basics") {
  PrecisionScope scope(kCtx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(kCtx.precision) - 12));
  QuadratureReport r = quadrature_J(0, Real(1L), Real(0L), kCtx);
  CHECK(abs(wide(r.value) - Real(1L)) <= bound);

  r = quadrature_J(1, Real(1L), Real(0L), kCtx);
  CHECK(abs(wide(r.value) - ldexp(const_pi(kCtx.working()), -2)) <= bound);

  CHECK(quadrature_J(0, Real(0L), Real(3L), kCtx).value.is_zero());
}

TEST_CASE("closed form of the exponential-weight integral") {
  PrecisionScope scope(kCtx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(kCtx.precision) - 16));
  // w -> 0 limit of the odd case equals the quadrature value
  CHECK(abs(wide(j_closed_form(0, Real(1L), Real(0L), kCtx)) - Real(1L)) <= bound);
  CHECK(abs(wide(j_closed_form(1, Real(1L), Real(0L), kCtx)) -
            ldexp(const_pi(kCtx.working()), -2)) <= bound);

  QuadratureReport q = quadrature_J(2, Real("0.6"), Real("1.5"), kCtx);
  Real c = j_closed_form(2, Real("0.6"), Real("1.5"), kCtx);
  CHECK(abs(wide(c) - wide(q.value)) <= wide(q.est_error) + bound);

  // a grid across parities and signs of w
  for (unsigned n = 0; n <= 5; ++n) {
    for (const char* xs : {"0.3", "0.7", "1"}) {
      for (const char* ws : {"-2", "-0.5", "1", "3"}) {
        QuadratureReport qq = quadrature_J(n, Real(xs), Real(ws), kCtx);
        Real cc = j_closed_form(n, Real(xs), Real(ws), kCtx);
        CHECK(abs(wide(cc) - wide(qq.value)) <= wide(qq.est_error) + bound);
      }
    }
  }
}

TEST_CASE("w-expansion coefficients") {
  PrecisionScope scope(kCtx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(kCtx.precision) - 20));
  WSeries ws = w_expand_J(0, Real(1L), 4, kCtx);
  CHECK(abs(wide(ws.coefficients[0]) - Real(1L)) <= bound);

  // x = 0: the integral is identically zero, so every coefficient vanishes
  WSeries at0 = w_expand_J(3, Real(0L), 4, kCtx);
  for (const Real& c : at0.coefficients) CHECK(abs(c) <= bound);

  // divided differences of the quadrature in w reproduce orders 0..3
  for (unsigned n : {1u, 2u}) {
    Real x("0.7");
    WSeries e = w_expand_J(n, x, 4, kCtx);
    Real h = ldexp(Real(1L), -20);
    auto J = [&](long i) {
      return wide(quadrature_J(n, x, h * Real(i), kCtx).value);
    };
    Real j0 = J(0), jp = J(1), jm = J(-1), jp2 = J(2), jm2 = J(-2);
    Real d0 = j0;
    Real d1 = ldexp(jp - jm, -1) / h;
    Real d2 = (jp - ldexp(j0, 1) + jm) / (h * h * Real(2L));
    Real d3 = (jp2 - ldexp(jp, 1) + ldexp(jm, 1) - jm2) / (pow_ui(h, 3) * Real(2L) * Real(6L));
    // h = 2^-20 2nd-order schemes: error ~ h^2 ~ 2^-40 on the next Taylor term
    Real fd_err = ldexp(Real(1L), -34);
    CHECK(abs(wide(e.coefficients[0]) - d0) <= fd_err);
    CHECK(abs(wide(e.coefficients[1]) - d1) <= fd_err);
    CHECK(abs(wide(e.coefficients[2]) - d2) <= fd_err);
    CHECK(abs(wide(e.coefficients[3]) - d3) <= fd_err);
  }
}

TEST_CASE("coefficient-extraction identity residuals") {
  PrecisionScope scope(kCtx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(kCtx.precision) - 20));
  CHECK(check_lemma32(0, 1, Real(Rational(1, 2)), kCtx) <= bound);
  CHECK(check_lemma32(3, 4, Real("0.9"), kCtx) <= bound);
  CHECK(check_lemma32(2, 3, Real(0L), kCtx) <= bound);
}

TEST_CASE("exact combinatorial identity pair") {
  auto [a1, b1] = check_cor54(1);
  CHECK(a1);
  CHECK(b1);
  auto [a, b] = check_cor54(200);
  CHECK(a);
  CHECK(b);
  // the two l = 1 values from first principles: 4 and 28/9
  Rational lhs1 = Rational(4) * Rational(binomial(2, 1 - 1), 1);
  CHECK(lhs1 == Rational(4));
  Rational lhs2 = Rational(binomial(3, 1)) + Rational(binomial(3, 0), 9);
  CHECK(lhs2 == Rational(28, 9));
}

TEST_CASE("suite runner") {
  SuiteParams sp;
  sp.pmax = 8;
  SuiteReport r = run_suite("lemma43", sp);
  CHECK(r.all_pass);
  CHECK(r.cases.size() == 8);

  sp = SuiteParams{};
  sp.lmax = 12;
  r = run_suite("cor54", sp);
  CHECK(r.all_pass);

  CHECK_THROWS_AS(run_suite("nosuch", SuiteParams{}), std::invalid_argument);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("oracle triangle on a sample of the acceptance grid") {
  PrecisionScope scope(kCtx.working());
  Real bound = ldexp(Real(1L), -(static_cast<long>(kCtx.precision) - 20));
  for (unsigned n : {0u, 1u, 4u}) {
    for (unsigned q : {1u, 2u, 5u}) {
      ClosedForm cf = arcsine_power_integral(n, q);
      for (const char* xs : {"0.3", "1"}) {
        Real x(xs);
        Real closed = wide(eval_closed_form(cf, x, kCtx));
        Real quad = wide(quadrature_I(n, q, x, kCtx).value);
        WSeries e = w_expand_J(n, x, q, kCtx);
        Real reconstructed = pow_ui(x, n + 1) / Real(n + 1L) * pow_ui(arcsine(x), q) -
                             Real(factorial(q)) / Real(n + 1L) *
                                 wide(e.coefficients[q - 1]);
        CHECK(abs(closed - quad) <= bound);
        CHECK(abs(closed - reconstructed) <= bound);
        CHECK(abs(quad - reconstructed) <= bound);
      }
    }
  }
}
