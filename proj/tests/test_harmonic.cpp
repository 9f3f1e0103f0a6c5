#include "doctest.h"

#include <sstream>

#include "arcpow/harmonic.hpp"

using namespace arcpow;

namespace {

// Brute-force nested-sum oracles, written directly from the defining
// strictly-decreasing-index sums.
Rational brute_g(unsigned p, unsigned k) {
  if (p == 0) return Rational(1);
  Rational acc(0);
  for (unsigned n1 = 0; n1 + 1 <= k; ++n1) {
    BigInt odd(2 * n1 + 1);
    acc += brute_g(p - 1, n1) / Rational(odd * odd);
  }
  return acc;
}

Rational brute_h(unsigned p, unsigned k) {
  if (p == 1) return Rational(1);
  Rational acc(0);
  for (unsigned n1 = 1; n1 + 1 <= k; ++n1) {
    BigInt even(2 * n1);
    acc += brute_h(p - 1, n1) / Rational(even * even);
  }
  return acc;
}

}  // namespace

TEST_CASE("named values") {
  HarmonicTable g = g_table(2, 8);
  HarmonicTable h = h_table(2, 8);
  CHECK(g.at(0, 5) == Rational(1));
  CHECK(g.at(1, 2) == Rational(10, 9));
  CHECK(g.at(2, 1) == Rational(0));
  CHECK(h.at(1, 7) == Rational(1));
  CHECK(h.at(2, 3) == Rational(5, 16));
  CHECK(h.at(2, 1) == Rational(0));
}

TEST_CASE("zero below the diagonal") {
  HarmonicTable g = g_table(4, 10);
  HarmonicTable h = h_table(4, 10);
  for (unsigned p = 1; p <= 4; ++p)
    for (unsigned k = 0; k < p; ++k) CHECK(g.at(p, k) == Rational(0));
  for (unsigned p = 2; p <= 4; ++p)
    for (unsigned k = 1; k + 1 <= p; ++k) CHECK(h.at(p, k) == Rational(0));
}

TEST_CASE("recurrence equals brute-force nested sums") {
  HarmonicTable g = g_table(4, 15);
  HarmonicTable h = h_table(4, 15);
  for (unsigned p = 0; p <= 4; ++p)
    for (unsigned k = 0; k <= 15; ++k) CHECK(g.at(p, k) == brute_g(p, k));
  for (unsigned p = 1; p <= 4; ++p)
    for (unsigned k = 1; k <= 15; ++k) CHECK(h.at(p, k) == brute_h(p, k));
}

TEST_CASE("depth-one specials") {
  HarmonicTable g = g_table(1, 50);
  HarmonicTable h = h_table(2, 50);
  Rational gs(0), hs(0);
  for (unsigned k = 1; k <= 50; ++k) {
    BigInt odd(2 * k - 1);
    gs += Rational(1, odd * odd);
    CHECK(g.at(1, k) == gs);
    if (k >= 2) {
      BigInt even(2 * (k - 1));
      hs += Rational(1, even * even);
    }
    CHECK(h.at(2, k) == hs);
  }
}

TEST_CASE("monotone in k and bounded by depth powers") {
  HarmonicTable g = g_table(3, 30);
  HarmonicTable h = h_table(3, 30);
  for (unsigned p = 0; p <= 3; ++p)
    for (unsigned k = 1; k <= 30; ++k) CHECK(g.at(p, k) >= g.at(p, k - 1));
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned k = 2; k <= 30; ++k) CHECK(h.at(p, k) >= h.at(p, k - 1));
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned k = 0; k <= 30; ++k) {
      Rational bound = rational_pow(g.at(1, k), p);
      CHECK(g.at(p, k) <= bound);
    }
  for (unsigned p = 1; p <= 2; ++p)
    for (unsigned k = 1; k <= 30; ++k)
      CHECK(h.at(p + 1, k) <= rational_pow(h.at(2, k), p));
}

TEST_CASE("floating mirror tracks the exact table") {
  PrecisionContext ctx{128, 32};
  PrecisionScope scope(ctx.working());
  HarmonicTable g = g_table(3, 40);
  HarmonicMirror mg(HarmonicKind::G, 3, ctx);
  Real bound = ldexp(Real(1L), -120);
  for (unsigned k = 0; k <= 40; ++k) {
    for (unsigned p = 0; p <= 3; ++p)
      CHECK(abs(mg.value(p) - Real(g.at(p, k))) <= bound);
    mg.advance();
  }
  HarmonicTable h = h_table(3, 40);
  HarmonicMirror mh(HarmonicKind::H, 3, ctx);
  for (unsigned k = 1; k <= 40; ++k) {
    for (unsigned p = 1; p <= 3; ++p)
      CHECK(abs(mh.value(p) - Real(h.at(p, k))) <= bound);
    mh.advance();
  }
}

TEST_CASE("csv dump shape") {
  HarmonicTable g = g_table(1, 2);
  std::ostringstream os;
  g.write_csv(os);
  CHECK(os.str() ==
        "p,k,numerator,denominator\n"
        "0,0,1,1\n0,1,1,1\n0,2,1,1\n"
        "1,0,0,1\n1,1,1,1\n1,2,10,9\n");
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(h_table(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(g_table(1, 1).at(5, 0), std::out_of_range);
}
