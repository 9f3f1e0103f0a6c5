#pragma once

#include <string>
#include <vector>

#include "arcpow/rational.hpp"
#include "arcpow/real.hpp"

namespace arcpow {

// Element of Q(sqrt(2)): u + v*sqrt(2).
struct QSqrt2 {
  Rational u{0};
  Rational v{0};

  bool is_zero() const { return u == 0 && v == 0; }

  friend QSqrt2 operator+(const QSqrt2& a, const QSqrt2& b) {
    return {a.u + b.u, a.v + b.v};
  }
  friend QSqrt2 operator-(const QSqrt2& a, const QSqrt2& b) {
    return {a.u - b.u, a.v - b.v};
  }
  friend QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b) {
    return {a.u * b.u + 2 * a.v * b.v, a.u * b.v + a.v * b.u};
  }
  friend QSqrt2 operator*(const Rational& c, const QSqrt2& a) {
    return {c * a.u, c * a.v};
  }
  friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
    return a.u == b.u && a.v == b.v;
  }

  Real value(const PrecisionContext& ctx) const;
  std::string str() const;
};

// Exact polynomial in pi over Q(sqrt(2)); equality is coefficient-wise.
class PiPoly {
 public:
  PiPoly() = default;
  static PiPoly constant(QSqrt2 c);

  void add(size_t pi_power, const QSqrt2& c);
  const QSqrt2& coeff(size_t pi_power) const;
  // Degree in pi, or -1 for the zero polynomial.
  int degree() const;

  friend PiPoly operator+(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator-(const PiPoly& a, const PiPoly& b);
  PiPoly scaled(const QSqrt2& c) const;
  friend bool operator==(const PiPoly& a, const PiPoly& b);

  Real value(const PrecisionContext& ctx) const;
  // e.g. "(1/2)*pi - 1" or "2 - sqrt(2)"; deterministic ordering by power.
  std::string str() const;

 private:
  void trim();
  std::vector<QSqrt2> coef_;  // index = pi power
  static const QSqrt2 zero_;
};

}  // namespace arcpow
