#pragma once

#include <array>
#include <vector>

#include "arcpow/rational.hpp"
#include "arcpow/real.hpp"

namespace arcpow {

// Dense integer-coefficient polynomial, index = degree.
struct IntPoly {
  std::vector<BigInt> coeff;

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  bool is_zero() const { return coeff.empty(); }
  const BigInt& operator[](size_t i) const { return coeff[i]; }
};

// Chebyshev polynomials of the first and second kind by the three-term
// recurrence; exact integer coefficients.
IntPoly chebyshev_t(unsigned n);
IntPoly chebyshev_u(unsigned n);

// Horner evaluation at working precision.
Real eval_poly(const IntPoly& p, const Real& x, const PrecisionContext& ctx);

// Exact integer evaluation (used for endpoint identities like T_n(1) = 1).
BigInt eval_poly_int(const IntPoly& p, const BigInt& x);

// Residuals of the four arcsine-composed identities
//   cos(2k asin x)     = (-1)^k     T_{2k}(x)
//   sin((2k+1) asin x) = (-1)^k     T_{2k+1}(x)
//   sin(2k asin x)     = (-1)^(k+1) U_{2k-1}(x) sqrt(1-x^2)
//   cos((2k+1) asin x) = (-1)^k     U_{2k}(x)   sqrt(1-x^2)
// with U_{-1} taken to be the zero polynomial.  Requires |x| <= 1.
std::array<Real, 4> lemma33_residuals(unsigned k, const Real& x,
                                      const PrecisionContext& ctx);

}  // namespace arcpow
