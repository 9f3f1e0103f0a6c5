#include "doctest.h"

#include "arcpow/number_theory.hpp"
#include "arcpow/rational.hpp"

using namespace arcpow;

namespace {

// Independent oracle: Pascal-triangle binomials.
BigInt pascal(unsigned n, unsigned k) {
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, BigInt(1));
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k < row.size() ? row[k] : BigInt(0);
}

// Independent oracle for |E_{2n}|: the boustrophedon (Entringer) triangle;
// the secant numbers are its even-row ends and E_{2n} = (-1)^n |E_{2n}|.
BigInt secant_number(unsigned n) {
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned i = 1; i <= 2 * n; ++i) {
    std::vector<BigInt> next(i + 1, BigInt(0));
    for (unsigned j = 1; j <= i; ++j) next[j] = next[j - 1] + row[i - j];
    row = std::move(next);
  }
  return row.back();
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == BigInt(6));
  CHECK(binomial(7, 9) == BigInt(0));
  CHECK(binomial(7, -1) == BigInt(0));
  CHECK(binomial(40, 20) == BigInt("137846528820"));
  CHECK(binomial(40, 20) == pascal(40, 20));
}

TEST_CASE("binomial Pascal recurrence up to 200") {
  for (unsigned n = 1; n <= 200; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned n = 3; n <= 61; n += 2) CHECK(bernoulli(n) == Rational(0));
  // defining recurrence as stated identity
  for (unsigned n = 1; n <= 60; ++n) {
    Rational acc(0);
    for (unsigned j = 0; j <= n; ++j) acc += Rational(binomial(n + 1, j)) * bernoulli(j);
    CHECK(acc == Rational(0));
  }
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == BigInt(1));
  CHECK(euler_number(1) == BigInt(0));
  CHECK(euler_number(2) == BigInt(-1));
  for (unsigned n = 1; n <= 61; n += 2) CHECK(euler_number(n) == BigInt(0));
  for (unsigned n = 0; n <= 30; ++n) {
    BigInt expect = secant_number(n);
    if (n % 2 == 1) expect = -expect;
    CHECK(euler_number(2 * n) == expect);
  }
}

TEST_CASE("polynomial values at one half") {
  CHECK(poly_value_half(PolyKind::bernoulli, 1) == Rational(0));
  CHECK(poly_value_half(PolyKind::bernoulli, 2) == Rational(-1, 12));
  CHECK(poly_value_half(PolyKind::euler, 0) == Rational(1));
  // the half-argument shortcuts act as the oracle
  for (unsigned n = 0; n <= 60; n += 2) {
    CHECK(poly_value_half(PolyKind::bernoulli, n) ==
          (pow2_rational(1 - static_cast<long>(n)) - Rational(1)) * bernoulli(n));
    CHECK(poly_value_half(PolyKind::euler, n) ==
          pow2_rational(-static_cast<long>(n)) * Rational(euler_number(n)));
  }
}

TEST_CASE("bernoulli summation formulas") {
  CHECK(lemma43_sum(1, 1) == Rational(2));
  CHECK(lemma43_sum(4, 3) == Rational(6));
  CHECK(lemma43_sum(3, 1) == Rational(2, 3));
  for (unsigned p = 1; p <= 50; ++p) {
    CHECK(lemma43_sum(1, p) == Rational(2 * p));
    CHECK(lemma43_sum(2, p) ==
          Rational(2 * p + 1) * (Rational(1) - Rational(euler_number(2 * p))));
    CHECK(lemma43_sum(3, p) ==
          Rational(2 * p - 1) + (Rational(2) - pow2_rational(2L * p)) * bernoulli(2 * p));
    CHECK(lemma43_sum(4, p) == Rational(2 * p));
  }
  CHECK_THROWS_AS(lemma43_sum(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(lemma43_sum(1, 0), std::invalid_argument);
}

TEST_CASE("half-integer central binomial") {
  CHECK(half_integer_central_binomial(0).coefficient == Rational(4));
  CHECK(half_integer_central_binomial(1).coefficient == Rational(32, 3));
  CHECK(half_integer_central_binomial(2).coefficient == Rational(512, 15));
}
