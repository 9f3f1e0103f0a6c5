#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcpow/closed_form.hpp"
#include "arcpow/harmonic.hpp"
#include "arcpow/pi_poly.hpp"
#include "arcpow/rational.hpp"
#include "arcpow/real.hpp"

namespace arcpow {

struct SeriesResult {
  Real partial_sum;
  long terms_used = 0;
  Real tail_estimate;
  bool converged = false;
};

// Families of sums the engine knows how to generate terms and tail bounds
// for.  g_series / h_series are the central-binomial series weighted by the
// nested harmonic sums:
//   g: sum_k  C(2k,k)/4^k * G_p(k) * x^(2k+m)/(2k+m)          (m >= 1, k >= 0)
//      with m = 0 meaning      ... * x^(2k)        (no denominator)
//   h: sum_k  4^k/C(2k,k) * H_p(k) * x^(2k+m)/(2k(2k+m))      (m >= 1, k >= 1)
//      with m = 0 meaning      ... * x^(2k)/(2k)
// partial_fraction: sum_k C(2k,k)/4^k G_p(k) x^(2k+2)/((2k+2+n)(2k+2+m)).
// eq58_left / eq58_right: 4*sum 1/(2k+1)^2 and sum 4^j/(C(2j,j) j^2).
// zeta_finite / beta_finite and the pi_limit families delegate to the exact
// finite-sum and limit-sequence evaluators below.
enum class SeriesFamily {
  g_series,
  h_series,
  partial_fraction,
  eq12,
  eq58_left,
  eq58_right,
  zeta_finite,
  beta_finite,
  pi_limit_odd,
  pi_limit_even,
};

struct SeriesSpec {
  SeriesFamily family = SeriesFamily::g_series;
  unsigned p = 0;  // harmonic depth (G_p / H_p)
  long m = 0;      // offset (see family comments); first offset for 5.2
  long m2 = 0;     // second offset for partial_fraction
  Real x{1L};
  unsigned s = 2;    // exponent for the finite zeta/beta sums
  long index = 0;    // ell for finite sums, n for the pi-limit sequences
  bool alternating = false;  // finite-sum sign variant

  void validate() const;  // throws std::invalid_argument / domain_error
};

// b_{k+1}/b_k for b_k = C(2k,k)/4^k.
Rational central_binomial_ratio_step(unsigned k);

// Sums the series with multiplicative term recurrences until the documented
// per-family tail bound drops below `tolerance` or `max_terms` is reached.
// Non-convergence is reported, never thrown.
SeriesResult sum_series(const SeriesSpec& spec, const Real& tolerance,
                        long max_terms, const PrecisionContext& ctx);

// Parameters for the identity catalog (ids like "2.17", "5.2", "lupu-odd").
struct IdentityParams {
  unsigned p = 0;
  long ell = 0;
  long n = 0;
  long m = 0;
  unsigned s = 2;
  std::optional<Real> x;
};

// Right-hand side of a catalogued identity: exact in Q(sqrt2)[pi] where the
// evaluation point allows it, numeric otherwise.  `value` is always set.
struct RhsValue {
  std::optional<PiPoly> exact;
  Real value;
};

RhsValue corollary_rhs(const std::string& id, const IdentityParams& params,
                       const PrecisionContext& ctx);

// The general-x right-hand sides (ids 2.13..2.16) as closed forms, exposed
// for symbolic-level tests.
ClosedForm corollary_rhs_form(const std::string& id, unsigned p);

enum class LupuFamily { odd, even };

// Exact values of the two direct arcsine-series sums at the half-sqrt2
// point: sum C(2k,k) G_p(k)/8^k and sum 2^k H_p(k)/(C(2k,k) k).
PiPoly lupu_rhs(LupuFamily family, unsigned p);

enum class ZetaSumKind { k49, k410, k411, k412 };

// Exact finite binomial-weighted power sums, normalized by the central
// column; the four variants converge to zeta(s), (1-2^(1-s))zeta(s),
// (1-2^(-s))zeta(s) and beta(s).
Rational zeta_beta_finite(ZetaSumKind kind, unsigned s, unsigned ell);

// Element n of the normalized limit sequences: odd family tends to
// pi^(2p+1) (p >= 0), even family to pi^(2p) (p >= 1).  For odd n the
// half-integer central binomial supplies the 1/pi prefactor.
Real pi_limit_value_odd_family(unsigned p, long n, const PrecisionContext& ctx);
Real pi_limit_value_even_family(unsigned p, long n, const PrecisionContext& ctx);

SeriesResult partial_fraction_series(unsigned p, long n, long m, const Real& x,
                                     const Real& tolerance, long max_terms,
                                     const PrecisionContext& ctx);

// High-precision zeta/beta targets.  Closed forms in pi at even s (zeta)
// and odd s (beta); Euler-Maclaurin elsewhere.
Real dirichlet_zeta(unsigned s, const PrecisionContext& ctx);
Real dirichlet_beta(unsigned s, const PrecisionContext& ctx);
PiPoly zeta_closed_form_even(unsigned n);  // zeta(2n)
PiPoly beta_closed_form_odd(unsigned n);   // beta(2n+1)

// Identity catalog: the series identities the CLI can evaluate by id.
struct IdentityInfo {
  std::string id;
  std::string params;  // e.g. "p, x"
  std::string description;
};
const std::vector<IdentityInfo>& identity_catalog();

struct IdentityEval {
  SeriesResult lhs;
  RhsValue rhs;
  Real abs_diff;
};
IdentityEval evaluate_identity(const std::string& id, const IdentityParams& params,
                               const Real& tolerance, long max_terms,
                               const PrecisionContext& ctx);

}  // namespace arcpow
