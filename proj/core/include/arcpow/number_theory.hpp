#pragma once

#include "arcpow/rational.hpp"

namespace arcpow {

// Exactly r / pi for rational r; carrier for the half-integer central
// binomial, whose Gamma-function value is rational over pi.
struct RationalOverPi {
  Rational coefficient;
};

// Bernoulli number B_n with the convention B_1 = -1/2, computed from the
// defining generating-function recurrence and memoized.
Rational bernoulli(unsigned n);

// Euler number E_n (integer), from the reciprocal-of-cosh convolution.
BigInt euler_number(unsigned n);

enum class PolyKind { bernoulli, euler };

// B_n(1/2) or E_n(1/2), evaluated from the defining polynomial sums.  The
// (2^(1-n)-1)B_n and 2^(-n)E_n shortcuts are deliberately not used here;
// they serve as the test oracle.
Rational poly_value_half(PolyKind kind, unsigned n);

// The four Bernoulli summation formulas used by the pi-limit proofs,
// evaluated term by term on the left-hand side:
//   1: sum_{j<p} C(2p+1,2j+1) 2^(2p-2j) B_{2p-2j}                 ( = 2p )
//   2: same with an extra (2^(2p-2j)-1) factor                    ( = (2p+1)(1-E_{2p}) )
//   3: sum_{j<p} C(2p,2j)   2^(2p-2j) B_{2p-2j}                   ( = 2p-1+(2-2^{2p})B_{2p} )
//   4: same with an extra (2^(2p-2j)-1) factor                    ( = 2p )
Rational lemma43_sum(int which, unsigned p);

// C(n, n/2) for odd n = 2*ell+1: 4^(2*ell+1) / (C(2*ell,ell) (2*ell+1) pi),
// returned as the rational coefficient of 1/pi.
RationalOverPi half_integer_central_binomial(unsigned ell);

}  // namespace arcpow
