#include "arcpow/pi_poly.hpp"

#include <sstream>

namespace arcpow {

const QSqrt2 PiPoly::zero_{};

Real QSqrt2::value(const PrecisionContext& ctx) const {
  PrecisionScope scope(ctx.working());
  Real r(u);
  if (!(v == 0)) r += Real(v) * sqrt(Real(2L));
  return r;
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r).str();
  } else {
    os << numerator(r).str() << '/' << denominator(r).str();
  }
  return os.str();
}

// Renders c with an explicit leading sign, e.g. "+ 1/2" or "- 3*sqrt(2)".
void append_coeff(std::ostringstream& os, const QSqrt2& c, bool leading) {
  auto piece = [&](const Rational& r, bool with_sqrt2, bool first_piece) {
    if (r == 0) return false;
    Rational ar = r < 0 ? Rational(-r) : r;
    if (first_piece) {
      if (leading) {
        if (r < 0) os << "-";
      } else {
        os << (r < 0 ? " - " : " + ");
      }
    } else {
      os << (r < 0 ? " - " : " + ");
    }
    if (with_sqrt2) {
      if (ar == 1)
        os << "sqrt(2)";
      else
        os << rational_str(ar) << "*sqrt(2)";
    } else {
      os << rational_str(ar);
    }
    return true;
  };
  bool wrote = piece(c.u, false, true);
  piece(c.v, true, !wrote);
}

}  // namespace

std::string QSqrt2::str() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  append_coeff(os, *this, true);
  return os.str();
}

PiPoly PiPoly::constant(QSqrt2 c) {
  PiPoly p;
  p.add(0, c);
  return p;
}

void PiPoly::add(size_t pi_power, const QSqrt2& c) {
  if (coef_.size() <= pi_power) coef_.resize(pi_power + 1);
  coef_[pi_power] = coef_[pi_power] + c;
  trim();
}

const QSqrt2& PiPoly::coeff(size_t pi_power) const {
  if (pi_power >= coef_.size()) return zero_;
  return coef_[pi_power];
}

int PiPoly::degree() const { return static_cast<int>(coef_.size()) - 1; }

PiPoly operator+(const PiPoly& a, const PiPoly& b) {
  PiPoly r = a;
  for (size_t i = 0; i < b.coef_.size(); ++i) r.add(i, b.coef_[i]);
  return r;
}

PiPoly operator-(const PiPoly& a, const PiPoly& b) {
  PiPoly r = a;
  for (size_t i = 0; i < b.coef_.size(); ++i)
    r.add(i, QSqrt2{-b.coef_[i].u, -b.coef_[i].v});
  return r;
}

PiPoly PiPoly::scaled(const QSqrt2& c) const {
  PiPoly r;
  for (size_t i = 0; i < coef_.size(); ++i) {
    QSqrt2 t = coef_[i] * c;
    if (!t.is_zero()) r.add(i, t);
  }
  return r;
}

bool operator==(const PiPoly& a, const PiPoly& b) { return a.coef_ == b.coef_; }

void PiPoly::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

Real PiPoly::value(const PrecisionContext& ctx) const {
  PrecisionScope scope(ctx.working());
  Real pi = const_pi(ctx.working());
  Real acc(0L);
  for (size_t i = coef_.size(); i-- > 0;) acc = acc * pi + coef_[i].value(ctx);
  return acc;
}

std::string PiPoly::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coef_.size(); ++i) {
    const QSqrt2& c = coef_[i];
    if (c.is_zero()) continue;
    bool simple = (c.u == 0) != (c.v == 0);
    if (i == 0) {
      append_coeff(os, c, first);
    } else if (simple) {
      append_coeff(os, c, first);
      os << "*";
    } else {
      if (!first) os << " + ";
      os << "(" << c.str() << ")*";
    }
    if (i >= 1) {
      os << "pi";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace arcpow
