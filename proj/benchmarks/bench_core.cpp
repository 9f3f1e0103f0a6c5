#include <benchmark/benchmark.h>

#include "arcpow/closed_form.hpp"
#include "arcpow/harmonic.hpp"
#include "arcpow/number_theory.hpp"
#include "arcpow/series.hpp"
#include "arcpow/verify.hpp"

using namespace arcpow;

namespace {

const PrecisionContext kCtx{128, 32};

void BM_closed_form_construct(benchmark::State& state) {
  const unsigned n = state.range(0);
  const unsigned q = state.range(1);
  for (auto _ : state) {
    ClosedForm f = arcsine_power_integral(n, q);
    benchmark::DoNotOptimize(f.term_count());
  }
}
BENCHMARK(BM_closed_form_construct)->Args({4, 3})->Args({8, 8})->Args({16, 9});

void BM_closed_form_eval(benchmark::State& state) {
  ClosedForm f = arcsine_power_integral(state.range(0), state.range(1));
  PrecisionScope scope(kCtx.working());
  Real x("0.7");
  for (auto _ : state) {
    Real v = eval_closed_form(f, x, kCtx);
    benchmark::DoNotOptimize(v.sign());
  }
}
BENCHMARK(BM_closed_form_eval)->Args({4, 3})->Args({8, 8});

void BM_quadrature_moment(benchmark::State& state) {
  PrecisionScope scope(kCtx.working());
  Real x("0.99");
  for (auto _ : state) {
    QuadratureReport r = quadrature_I(state.range(0), state.range(1), x, kCtx);
    benchmark::DoNotOptimize(r.intervals_used);
  }
}
BENCHMARK(BM_quadrature_moment)->Args({4, 3})->Args({8, 8});

void BM_harmonic_table_exact(benchmark::State& state) {
  const size_t kmax = state.range(0);
  for (auto _ : state) {
    HarmonicTable t = g_table(3, kmax);
    benchmark::DoNotOptimize(t.k_max());
  }
}
BENCHMARK(BM_harmonic_table_exact)->Arg(100)->Arg(500);

void BM_series_half_sqrt2(benchmark::State& state) {
  PrecisionScope scope(kCtx.working());
  SeriesSpec spec;
  spec.family = SeriesFamily::g_series;
  spec.p = 2;
  spec.m = 2;
  spec.x = ldexp(sqrt(Real(2L)), -1);
  Real tol = ldexp(Real(1L), -130);
  for (auto _ : state) {
    SeriesResult r = sum_series(spec, tol, 1000000, kCtx);
    benchmark::DoNotOptimize(r.terms_used);
  }
}
BENCHMARK(BM_series_half_sqrt2);

void BM_series_x1_10k_terms(benchmark::State& state) {
  PrecisionScope scope(kCtx.working());
  SeriesSpec spec;
  spec.family = SeriesFamily::g_series;
  spec.p = 1;
  spec.m = 3;
  spec.x = Real(1L);
  Real tol = ldexp(Real(1L), -200);
  for (auto _ : state) {
    SeriesResult r = sum_series(spec, tol, 10000, kCtx);
    benchmark::DoNotOptimize(r.terms_used);
  }
}
BENCHMARK(BM_series_x1_10k_terms);

void BM_pi_limit_element(benchmark::State& state) {
  for (auto _ : state) {
    Real v = pi_limit_value_odd_family(2, state.range(0), kCtx);
    benchmark::DoNotOptimize(v.sign());
  }
}
BENCHMARK(BM_pi_limit_element)->Arg(256)->Arg(4096);

void BM_bernoulli_fresh_table(benchmark::State& state) {
  for (auto _ : state) {
    // the table memoizes, so per-iteration cost after the first is lookup
    benchmark::DoNotOptimize(bernoulli(state.range(0)));
  }
}
BENCHMARK(BM_bernoulli_fresh_table)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
