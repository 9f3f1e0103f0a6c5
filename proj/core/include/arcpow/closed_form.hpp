#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "arcpow/chebyshev.hpp"
#include "arcpow/pi_poly.hpp"
#include "arcpow/rational.hpp"
#include "arcpow/real.hpp"

namespace arcpow {

// Exponent triple of a monomial coeff * x^x_deg * s^s_deg * a^a_deg where
// s = sqrt(1-x^2) and a = arcsin(x).  s_deg is kept in {0,1}: s^2 is always
// rewritten as 1 - x^2.
struct PowKey {
  unsigned x_deg = 0;
  unsigned s_deg = 0;
  unsigned a_deg = 0;
  auto operator<=>(const PowKey&) const = default;
};

// Sparse exact polynomial in (x, s, a) with the s^2 -> 1-x^2 reduction
// maintained as an invariant; no zero coefficients are stored.
class ClosedForm {
 public:
  using TermMap = std::map<PowKey, Rational>;

  ClosedForm() = default;
  static ClosedForm constant(const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  unsigned max_a_degree() const;

  // Adds c * x^k.x_deg * s^k.s_deg * a^k.a_deg, reducing s powers >= 2.
  void add_term(PowKey k, const Rational& c);

  ClosedForm& operator+=(const ClosedForm& o);
  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  ClosedForm scaled(const Rational& c) const;
  // Product by a single monomial (s-reduction applied).
  ClosedForm times_monomial(unsigned dx, unsigned ds, unsigned da,
                            const Rational& c) const;
  // Product by an integer polynomial in x.
  ClosedForm times_poly_in_x(const IntPoly& p) const;
  friend bool operator==(const ClosedForm& a, const ClosedForm& b) {
    return a.terms_ == b.terms_;
  }

  // Exact value at x = 0 (a = 0, s = 1): the rational constant that must
  // vanish for any integral form.
  Rational value_at_zero() const;

  std::string str_plain() const;
  std::string str_latex() const;
  // {"terms":[{"x":i,"s":j,"a":k,"num":"...","den":"..."}]}
  std::string to_json() const;

 private:
  TermMap terms_;
};

// Partial sum of the cosine (even powers, j <= 2p) or sine (odd powers,
// j <= 2p+1) Maclaurin series, as exact coefficients in z.  p = -1 for the
// sine kind is the zero polynomial.
struct TrigPartialPoly {
  enum class Kind { cos_partial, sin_partial };
  Kind kind;
  int p;
  std::vector<std::pair<unsigned, Rational>> coeffs;  // (z power, coefficient)
};

TrigPartialPoly trig_partial(TrigPartialPoly::Kind kind, int p);

// The trig partial evaluated at z = mult * a, as a closed form in a alone.
ClosedForm trig_partial_in_a(const TrigPartialPoly& t, unsigned long mult);

// Closed form of the arcsine moment integral(0..x) t^n (arcsin t)^q dt,
// dispatching on the parities of n and q.  q must be >= 1 (the q = 0 moment
// is the elementary x^(n+1)/(n+1) and is not part of this family).
ClosedForm arcsine_power_integral(unsigned n, unsigned q);

// Numeric evaluation at |x| <= 1: a and s are computed at working precision
// and the result is accepted only once two guard levels agree on the first
// ctx.precision bits.
Real eval_closed_form(const ClosedForm& cf, const Real& x,
                      const PrecisionContext& ctx);

enum class PiPoint { one, sqrt2_over_2 };

// Exact specialization at (x,s,a) = (1, 0, pi/2) or (sqrt2/2, sqrt2/2, pi/4).
PiPoly specialize_pi(const ClosedForm& cf, PiPoint point);

}  // namespace arcpow
