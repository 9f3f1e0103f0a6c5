#include "arcpow/number_theory.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace arcpow {

namespace {

// Memoized tables behind a lock; entries are immutable once computed, so
// returning copies keeps readers safe from reallocation.
class NumberTheoryTable {
 public:
  Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend_bernoulli(n);
    return bernoulli_[n];
  }

  BigInt euler(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend_euler(n);
    return euler_[n];
  }

 private:
  // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j, B_0 = 1.
  void extend_bernoulli(unsigned n) {
    if (bernoulli_.empty()) bernoulli_.push_back(Rational(1));
    for (unsigned m = bernoulli_.size(); m <= n; ++m) {
      Rational acc(0);
      for (unsigned j = 0; j < m; ++j)
        acc += Rational(binomial(m + 1, j)) * bernoulli_[j];
      bernoulli_.push_back(-acc / Rational(m + 1));
    }
  }

  // E_n = -sum_{m=1}^{floor(n/2)} C(n, 2m) E_{n-2m}, E_0 = 1.
  void extend_euler(unsigned n) {
    if (euler_.empty()) euler_.push_back(BigInt(1));
    for (unsigned m = euler_.size(); m <= n; ++m) {
      BigInt acc(0);
      for (unsigned j = 2; j <= m; j += 2) acc += binomial(m, j) * euler_[m - j];
      euler_.push_back(-acc);
    }
  }

  std::mutex mu_;
  std::vector<Rational> bernoulli_;
  std::vector<BigInt> euler_;
};

NumberTheoryTable& table() {
  static NumberTheoryTable t;
  return t;
}

}  // namespace

Rational bernoulli(unsigned n) { return table().bernoulli(n); }

BigInt euler_number(unsigned n) { return table().euler(n); }

Rational poly_value_half(PolyKind kind, unsigned n) {
  const Rational half(1, 2);
  if (kind == PolyKind::bernoulli) {
    // B_n(x) = sum_j C(n,j) B_j x^(n-j) at x = 1/2.
    Rational acc(0);
    for (unsigned j = 0; j <= n; ++j)
      acc += Rational(binomial(n, j)) * bernoulli(j) * rational_pow(half, n - j);
    return acc;
  }
  // E_{m-1}(x) = (2/m) sum_j C(m,j) (1-2^j) B_j x^(m-j) with m = n+1.
  const unsigned m = n + 1;
  Rational acc(0);
  for (unsigned j = 0; j <= m; ++j) {
    Rational factor = Rational(1) - pow2_rational(static_cast<long>(j));
    acc += Rational(binomial(m, j)) * factor * bernoulli(j) * rational_pow(half, m - j);
  }
  return Rational(2) * acc / Rational(m);
}

Rational lemma43_sum(int which, unsigned p) {
  if (which < 1 || which > 4) throw std::invalid_argument("lemma43_sum: which must be 1..4");
  if (p < 1) throw std::invalid_argument("lemma43_sum: p must be >= 1");
  Rational acc(0);
  for (unsigned j = 0; j < p; ++j) {
    const unsigned e = 2 * p - 2 * j;
    const BigInt two_e = BigInt(1) << e;
    BigInt c = (which <= 2) ? binomial(2 * p + 1, 2 * j + 1) : binomial(2 * p, 2 * j);
    Rational term = Rational(c * two_e) * bernoulli(e);
    if (which == 2 || which == 4) term *= Rational(two_e - 1);
    acc += term;
  }
  return acc;
}

RationalOverPi half_integer_central_binomial(unsigned ell) {
  BigInt num = int_pow(BigInt(4), 2 * ell + 1);
  BigInt den = binomial(2 * ell, ell) * BigInt(2 * ell + 1);
  return RationalOverPi{Rational(num, den)};
}

}  // namespace arcpow
