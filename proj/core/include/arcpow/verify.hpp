#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "arcpow/real.hpp"

namespace arcpow {

struct QuadratureReport {
  Real value;
  long intervals_used = 0;
  // Subdivision-convergence estimate, not a rigorous bound.
  Real est_error;
};

// integral(0..x) t^n (arcsin t)^q dt through the t = sin(theta) substitution:
// the integrand sin^n(theta) cos(theta) theta^q is smooth on [0, arcsin x],
// which removes the endpoint derivative singularity at x -> 1.
// Adaptive bisection with Gauss panels to est_error <= 2^-(P-10).
QuadratureReport quadrature_I(unsigned n, unsigned q, const Real& x,
                              const PrecisionContext& ctx);

// integral(0..arcsin x) sin(theta)^(n+1) e^(w theta) d theta.
QuadratureReport quadrature_J(unsigned n, const Real& x, const Real& w,
                              const PrecisionContext& ctx);

// The same integral from its finite closed form (Chebyshev data plus
// rational functions of w); the w -> 0 singular first term of the odd-n
// case is replaced by its limit when |w| < 2^(-P/2).
Real j_closed_form(unsigned n, const Real& x, const Real& w,
                   const PrecisionContext& ctx);

// Taylor coefficients in w at w = 0, indices 0..order.
struct WSeries {
  std::vector<Real> coefficients;
};
WSeries w_expand_J(unsigned n, const Real& x, unsigned order,
                   const PrecisionContext& ctx);

// | I_q^(n)(x) - x^(n+1)/(n+1) a^q + q!/(n+1) [w^(q-1)] J |, the coefficient
// identity that generates every closed form; both sides independent.
Real check_lemma32(unsigned n, unsigned q, const Real& x,
                   const PrecisionContext& ctx);

// The two exact combinatorial identities tying the even-offset H-series
// rational parts to inverse-central-binomial sums; exact equality checks.
std::pair<bool, bool> check_cor54(unsigned ell);

struct SuiteCase {
  std::string name;
  std::string detail;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  bool all_pass = true;

  void add(std::string name, std::string detail, bool pass) {
    cases.push_back({std::move(name), std::move(detail), pass});
    all_pass = all_pass && cases.back().pass;
  }
  void print_table(std::ostream& os) const;
};

struct SuiteParams {
  PrecisionContext ctx{128, 32};
  unsigned pmax = 0;  // 0: suite default
  unsigned lmax = 0;
  unsigned nmax = 0;
  unsigned qmax = 0;
  long max_terms = 0;
};

// Known suites: thm21, lemma32, lemma33, lemma34, cor23-bridge, lemma43,
// cor54, pi-limits, series-all.  Throws std::invalid_argument on unknown
// names.  Case order follows grid enumeration.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

const std::vector<std::string>& suite_names();

}  // namespace arcpow
