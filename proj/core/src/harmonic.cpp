#include "arcpow/harmonic.hpp"

#include <stdexcept>

namespace arcpow {

HarmonicTable::HarmonicTable(HarmonicKind kind, size_t p_max, size_t k_max)
    : kind_(kind), p_max_(p_max), k_max_(k_max) {
  if (kind == HarmonicKind::H && p_max < 1)
    throw std::invalid_argument("h_table: p_max must be >= 1");
  values_.assign(p_max + 1, std::vector<Rational>(k_max + 1, Rational(0)));
  if (kind == HarmonicKind::G) {
    // G_0(k) = 1; G_p(k) = G_p(k-1) + G_{p-1}(k-1) / (2k-1)^2.
    for (size_t k = 0; k <= k_max; ++k) values_[0][k] = Rational(1);
    for (size_t p = 1; p <= p_max; ++p) {
      for (size_t k = 1; k <= k_max; ++k) {
        BigInt odd(2 * k - 1);
        values_[p][k] = values_[p][k - 1] + values_[p - 1][k - 1] / Rational(odd * odd);
      }
    }
  } else {
    // H_1(k) = 1 (k >= 1); H_{p+1}(k) = H_{p+1}(k-1) + H_p(k-1) / (2(k-1))^2.
    for (size_t k = 0; k <= k_max; ++k) values_[1][k] = Rational(1);
    values_[1][0] = Rational(1);
    for (size_t p = 2; p <= p_max; ++p) {
      for (size_t k = 2; k <= k_max; ++k) {
        BigInt even(2 * (k - 1));
        values_[p][k] = values_[p][k - 1] + values_[p - 1][k - 1] / Rational(even * even);
      }
    }
  }
}

const Rational& HarmonicTable::at(size_t p, size_t k) const {
  if (p >= values_.size() || k >= values_[p].size())
    throw std::out_of_range("HarmonicTable::at");
  return values_[p][k];
}

void HarmonicTable::write_csv(std::ostream& os) const {
  os << "p,k,numerator,denominator\n";
  const size_t p_lo = (kind_ == HarmonicKind::G) ? 0 : 1;
  const size_t k_lo = (kind_ == HarmonicKind::G) ? 0 : 1;
  for (size_t p = p_lo; p <= p_max_; ++p)
    for (size_t k = k_lo; k <= k_max_; ++k)
      os << p << ',' << k << ',' << numerator(values_[p][k]).str() << ','
         << denominator(values_[p][k]).str() << '\n';
}

HarmonicTable g_table(size_t p_max, size_t k_max) {
  return HarmonicTable(HarmonicKind::G, p_max, k_max);
}

HarmonicTable h_table(size_t p_max, size_t k_max) {
  if (p_max < 1 || k_max < 1)
    throw std::invalid_argument("h_table: p_max and k_max must be >= 1");
  return HarmonicTable(HarmonicKind::H, p_max, k_max);
}

HarmonicMirror::HarmonicMirror(HarmonicKind kind, size_t p_max,
                               const PrecisionContext& ctx)
    : kind_(kind) {
  PrecisionScope scope(ctx.working());
  if (kind == HarmonicKind::G) {
    k_ = 0;
    row_.assign(p_max + 1, Real(0L));
    row_[0] = Real(1L);
  } else {
    k_ = 1;
    row_.assign(p_max + 1, Real(0L));
    row_[1] = Real(1L);
  }
}

void HarmonicMirror::advance() {
  if (kind_ == HarmonicKind::G) {
    // Update top-down so row_[p-1] is still the value at the previous k.
    Real w = Real::with_prec(row_[0].prec());
    mpfr_set_ui(w.raw(), static_cast<unsigned long>(2 * k_ + 1), MPFR_RNDN);
    w = 1L / (w * w);
    for (size_t p = row_.size(); p-- > 1;) row_[p] += row_[p - 1] * w;
    ++k_;
  } else {
    Real w = Real::with_prec(row_[1].prec());
    mpfr_set_ui(w.raw(), static_cast<unsigned long>(2 * k_), MPFR_RNDN);
    w = 1L / (w * w);
    for (size_t p = row_.size(); p-- > 2;) row_[p] += row_[p - 1] * w;
    ++k_;
  }
}

}  // namespace arcpow
