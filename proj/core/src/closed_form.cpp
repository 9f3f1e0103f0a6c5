#include "arcpow/closed_form.hpp"

#include <sstream>
#include <stdexcept>

namespace arcpow {

ClosedForm ClosedForm::constant(const Rational& c) {
  ClosedForm f;
  f.add_term(PowKey{0, 0, 0}, c);
  return f;
}

unsigned ClosedForm::max_a_degree() const {
  unsigned m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.a_deg);
  return m;
}

void ClosedForm::add_term(PowKey k, const Rational& c) {
  if (c == 0) return;
  if (k.s_deg >= 2) {
    // s^2 = 1 - x^2, applied recursively until s_deg <= 1.
    add_term(PowKey{k.x_deg, k.s_deg - 2, k.a_deg}, c);
    add_term(PowKey{k.x_deg + 2, k.s_deg - 2, k.a_deg}, -c);
    return;
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

ClosedForm ClosedForm::scaled(const Rational& c) const {
  ClosedForm r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

ClosedForm ClosedForm::times_monomial(unsigned dx, unsigned ds, unsigned da,
                                      const Rational& c) const {
  ClosedForm r;
  for (const auto& [k, v] : terms_)
    r.add_term(PowKey{k.x_deg + dx, k.s_deg + ds, k.a_deg + da}, v * c);
  return r;
}

ClosedForm ClosedForm::times_poly_in_x(const IntPoly& p) const {
  ClosedForm r;
  for (size_t d = 0; d < p.coeff.size(); ++d) {
    if (p.coeff[d] == 0) continue;
    r += times_monomial(static_cast<unsigned>(d), 0, 0, Rational(p.coeff[d]));
  }
  return r;
}

Rational ClosedForm::value_at_zero() const {
  Rational acc(0);
  for (const auto& [k, c] : terms_)
    if (k.x_deg == 0 && k.a_deg == 0) acc += c;  // s = 1 at x = 0
  return acc;
}

TrigPartialPoly trig_partial(TrigPartialPoly::Kind kind, int p) {
  if (kind == TrigPartialPoly::Kind::cos_partial && p < 0)
    throw std::invalid_argument("trig_partial: cos kind needs p >= 0");
  if (kind == TrigPartialPoly::Kind::sin_partial && p < -1)
    throw std::invalid_argument("trig_partial: sin kind needs p >= -1");
  TrigPartialPoly t{kind, p, {}};
  for (int j = 0; j <= p; ++j) {
    unsigned pw = (kind == TrigPartialPoly::Kind::cos_partial) ? 2 * j : 2 * j + 1;
    Rational c = Rational(1, factorial(pw));
    if (j % 2 == 1) c = -c;
    t.coeffs.emplace_back(pw, c);
  }
  return t;
}

ClosedForm trig_partial_in_a(const TrigPartialPoly& t, unsigned long mult) {
  ClosedForm f;
  for (const auto& [pw, c] : t.coeffs)
    f.add_term(PowKey{0, 0, pw}, c * Rational(int_pow(BigInt(mult), pw)));
  return f;
}

namespace {

using Kind = TrigPartialPoly::Kind;

// Common layout of the four closed forms: a leading a^q part plus a scaled
// sum over k of P_k(a) * T(x) +/- Q_k(a) * U(x) * s (+ constant).
ClosedForm even_n_case(unsigned ell, unsigned q, bool q_odd) {
  const int p = q_odd ? static_cast<int>((q - 1) / 2) : static_cast<int>(q / 2);
  ClosedForm total;
  // x^(2l+1)/(2l+1) * a^q
  total.add_term(PowKey{2 * ell + 1, 0, q}, Rational(1, BigInt(2 * ell + 1)));

  // (-1)^p q! / (4^l (2l+1))
  Rational outer = Rational(factorial(q), int_pow(BigInt(4), ell) * BigInt(2 * ell + 1));
  if (p % 2 == 1) outer = -outer;

  ClosedForm sum;
  for (unsigned k = 0; k <= ell; ++k) {
    const unsigned long m = 2 * k + 1;
    Rational weight = Rational(binomial(2 * ell + 1, static_cast<long>(ell - k)),
                               int_pow(BigInt(m), q));
    ClosedForm inner;
    if (q_odd) {
      // s_{p-1}(ma) T_m(x) + c_p(ma) U_{m-1}(x) s - (-1)^k
      inner += trig_partial_in_a(trig_partial(Kind::sin_partial, p - 1), m)
                   .times_poly_in_x(chebyshev_t(m));
      inner += trig_partial_in_a(trig_partial(Kind::cos_partial, p), m)
                   .times_poly_in_x(chebyshev_u(m - 1))
                   .times_monomial(0, 1, 0, Rational(1));
      inner.add_term(PowKey{0, 0, 0}, Rational(k % 2 == 0 ? -1 : 1));
    } else {
      // c_{p-1}(ma) T_m(x) - s_{p-1}(ma) U_{m-1}(x) s
      inner += trig_partial_in_a(trig_partial(Kind::cos_partial, p - 1), m)
                   .times_poly_in_x(chebyshev_t(m));
      inner += trig_partial_in_a(trig_partial(Kind::sin_partial, p - 1), m)
                   .times_poly_in_x(chebyshev_u(m - 1))
                   .times_monomial(0, 1, 0, Rational(-1));
    }
    sum += inner.scaled(weight);
  }
  total += sum.scaled(outer);
  return total;
}

ClosedForm odd_n_case(unsigned ell, unsigned q, bool q_odd) {
  const int p = q_odd ? static_cast<int>((q - 1) / 2) : static_cast<int>(q / 2);
  ClosedForm total;
  // (x^(2l) - C(2l,l)/4^l) a^q / (2l)
  total.add_term(PowKey{2 * ell, 0, q}, Rational(1, BigInt(2 * ell)));
  total.add_term(PowKey{0, 0, q},
                 -Rational(binomial(2 * ell, ell),
                           int_pow(BigInt(4), ell) * BigInt(2 * ell)));

  // (-1)^p q! / (2^(2l-1) * 2l)
  Rational outer = Rational(factorial(q),
                            (BigInt(1) << (2 * ell - 1)) * BigInt(2 * ell));
  if (p % 2 == 1) outer = -outer;

  ClosedForm sum;
  for (unsigned k = 1; k <= ell; ++k) {
    const unsigned long m = 2 * k;
    Rational weight = Rational(binomial(2 * ell, static_cast<long>(ell - k)),
                               int_pow(BigInt(m), q));
    ClosedForm inner;
    if (q_odd) {
      // s_{p-1}(ma) T_m(x) + c_p(ma) U_{m-1}(x) s
      inner += trig_partial_in_a(trig_partial(Kind::sin_partial, p - 1), m)
                   .times_poly_in_x(chebyshev_t(m));
      inner += trig_partial_in_a(trig_partial(Kind::cos_partial, p), m)
                   .times_poly_in_x(chebyshev_u(m - 1))
                   .times_monomial(0, 1, 0, Rational(1));
    } else {
      // c_{p-1}(ma) T_m(x) - s_{p-1}(ma) U_{m-1}(x) s - (-1)^k
      inner += trig_partial_in_a(trig_partial(Kind::cos_partial, p - 1), m)
                   .times_poly_in_x(chebyshev_t(m));
      inner += trig_partial_in_a(trig_partial(Kind::sin_partial, p - 1), m)
                   .times_poly_in_x(chebyshev_u(m - 1))
                   .times_monomial(0, 1, 0, Rational(-1));
      inner.add_term(PowKey{0, 0, 0}, Rational(k % 2 == 0 ? -1 : 1));
    }
    sum += inner.scaled(weight);
  }
  total += sum.scaled(outer);
  return total;
}

}  // namespace

ClosedForm arcsine_power_integral(unsigned n, unsigned q) {
  if (q == 0)
    throw std::invalid_argument(
        "arcsine_power_integral: q must be >= 1 (q = 0 is the elementary "
        "moment x^(n+1)/(n+1))");
  const bool q_odd = (q % 2 == 1);
  if (n % 2 == 0) return even_n_case(n / 2, q, q_odd);
  return odd_n_case((n + 1) / 2, q, q_odd);
}

Real eval_closed_form(const ClosedForm& cf, const Real& x,
                      const PrecisionContext& ctx) {
  if (abs(x) > 1L) throw std::domain_error("eval_closed_form: |x| > 1");
  auto compute = [&]() {
    const mpfr_prec_t wp = default_real_prec();
    Real xs = x.promoted(wp);
    Real a = arcsine(xs);
    Real s = sqrt(1L - xs * xs);
    // Group by (s_deg, a_deg); Horner in x within each group.
    Real acc(0L);
    auto it = cf.terms().begin();
    while (it != cf.terms().end()) {
      // terms() is sorted by (x_deg, s_deg, a_deg); gather one x-power at a
      // time instead: simply evaluate term by term with cached powers.
      const auto& [k, c] = *it;
      Real t(c);
      if (k.x_deg) t *= pow_ui(xs, k.x_deg);
      if (k.s_deg) t *= s;
      if (k.a_deg) t *= pow_ui(a, k.a_deg);
      acc += t;
      ++it;
    }
    return acc;
  };
  return stable_eval(compute, ctx);
}

PiPoly specialize_pi(const ClosedForm& cf, PiPoint point) {
  PiPoly out;
  if (point == PiPoint::one) {
    // (x, s, a) = (1, 0, pi/2)
    for (const auto& [k, c] : cf.terms()) {
      if (k.s_deg > 0) continue;
      out.add(k.a_deg, QSqrt2{c * pow2_rational(-static_cast<long>(k.a_deg)),
                              Rational(0)});
    }
    return out;
  }
  // (x, s, a) = (sqrt2/2, sqrt2/2, pi/4): (sqrt2/2)^e is rational for even e
  // and a rational multiple of sqrt(2) for odd e.
  for (const auto& [k, c] : cf.terms()) {
    const unsigned e = k.x_deg + k.s_deg;
    Rational scale = c * rational_pow(Rational(1, 4), k.a_deg);
    QSqrt2 q;
    if (e % 2 == 0) {
      q.u = scale * pow2_rational(-static_cast<long>(e / 2));
    } else {
      q.v = scale * pow2_rational(-static_cast<long>((e + 1) / 2));
    }
    out.add(k.a_deg, q);
  }
  return out;
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r).str();
  if (denominator(r) != 1) os << '/' << denominator(r).str();
  return os.str();
}

}  // namespace

std::string ClosedForm::str_plain() const {
  if (terms_.empty()) return "0";
  // Ordered by descending a power, then descending x power.
  std::vector<std::pair<PowKey, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
    if (l.first.a_deg != r.first.a_deg) return l.first.a_deg > r.first.a_deg;
    if (l.first.x_deg != r.first.x_deg) return l.first.x_deg > r.first.x_deg;
    return l.first.s_deg > r.first.s_deg;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (ac == 1);
    bool has_var = k.x_deg || k.s_deg || k.a_deg;
    if (!unit || !has_var) os << rational_str(ac);
    bool need_star = !unit && has_var;
    auto put = [&](const char* sym, unsigned d) {
      if (!d) return;
      if (need_star) os << "*";
      need_star = true;
      os << sym;
      if (d > 1) os << "^" << d;
    };
    put("x", k.x_deg);
    put("s", k.s_deg);
    put("a", k.a_deg);
  }
  return os.str();
}

std::string ClosedForm::str_latex() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<PowKey, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
    if (l.first.a_deg != r.first.a_deg) return l.first.a_deg > r.first.a_deg;
    if (l.first.x_deg != r.first.x_deg) return l.first.x_deg > r.first.x_deg;
    return l.first.s_deg > r.first.s_deg;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = k.x_deg || k.s_deg || k.a_deg;
    if (denominator(ac) != 1) {
      os << "\\frac{" << numerator(ac).str() << "}{" << denominator(ac).str() << "}";
    } else if (ac != 1 || !has_var) {
      os << numerator(ac).str();
    }
    auto put = [&](const char* sym, unsigned d) {
      if (!d) return;
      os << sym;
      if (d > 1) os << "^{" << d << "}";
    };
    put("x", k.x_deg);
    put("\\sqrt{1-x^2}", k.s_deg);
    put("\\arcsin(x)", k.a_deg);
  }
  return os.str();
}

std::string ClosedForm::to_json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"x\":" << k.x_deg << ",\"s\":" << k.s_deg << ",\"a\":" << k.a_deg
       << ",\"num\":\"" << numerator(c).str() << "\",\"den\":\""
       << denominator(c).str() << "\"}";
  }
  os << "]}";
  return os.str();
}

}  // namespace arcpow
