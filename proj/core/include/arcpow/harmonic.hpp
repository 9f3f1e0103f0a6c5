#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "arcpow/rational.hpp"
#include "arcpow/real.hpp"

namespace arcpow {

enum class HarmonicKind { G, H };

// Exact rational table of the nested reciprocal-square sums
//   G_p(k): strictly decreasing indices over odd squares, G_0(k) = 1
//   H_p(k): strictly decreasing indices over even squares, H_1(k) = 1
// Zero-by-convention entries (k < p for G, k <= p-1 for H) are materialized
// so that indexing is total.  Immutable once built.
class HarmonicTable {
 public:
  HarmonicTable(HarmonicKind kind, size_t p_max, size_t k_max);

  HarmonicKind kind() const { return kind_; }
  size_t p_max() const { return p_max_; }
  size_t k_max() const { return k_max_; }
  const Rational& at(size_t p, size_t k) const;

  // CSV rows: p,k,numerator,denominator (header included).
  void write_csv(std::ostream& os) const;

 private:
  HarmonicKind kind_;
  size_t p_max_, k_max_;
  std::vector<std::vector<Rational>> values_;  // [p][k]
};

HarmonicTable g_table(size_t p_max, size_t k_max);
HarmonicTable h_table(size_t p_max, size_t k_max);  // p_max >= 1, k_max >= 1

// Streaming floating-point mirror of one table at working precision: holds
// the column G_0(k)..G_pmax(k) (or H_1(k)..H_pmax(k)) for the current k and
// advances in O(p_max).  Used by the series engine, where exact rationals
// would be wasted on tail-bounded numeric sums.
class HarmonicMirror {
 public:
  HarmonicMirror(HarmonicKind kind, size_t p_max, const PrecisionContext& ctx);

  size_t k() const { return k_; }
  // Value at depth p for the current k.
  const Real& value(size_t p) const { return row_[p]; }
  void advance();

 private:
  HarmonicKind kind_;
  size_t k_;
  std::vector<Real> row_;
};

}  // namespace arcpow
