#include "fp/diffop.hpp"
#include "fp/frobenius.hpp"
#include "fp/recognize.hpp"
#include "fp/transport.hpp"
#include "fp/zeta.hpp"

#include <benchmark/benchmark.h>

static void BM_BuildHSeries(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::size_t M = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        auto s = fp::build_h_series(n, M);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_BuildHSeries)->Args({3, 100})->Args({10, 100});

static void BM_ZetaOdd(benchmark::State& state) {
    fp::PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto z = fp::zeta_odd(3, ctx);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_ZetaOdd)->Arg(120)->Arg(500);

static void BM_PsiOde(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto ode = fp::derivative_ode(fp::psi_ode(n), 2);
        benchmark::DoNotOptimize(ode);
    }
}
BENCHMARK(BM_PsiOde)->Arg(4)->Arg(10);

static void BM_Transport(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    fp::PrecisionContext ctx(static_cast<unsigned>(state.range(1)));
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    fp::PsiODE ode = fp::psi_ode(n);
    fp::JetPoint start =
        fp::initial_jet(n, fp::Complex(fp::Real(-3)), fp::default_log_branch(n), ctx);
    fp::TransportPath path = fp::default_path(n);
    for (auto _ : state) {
        auto jets = fp::transport(ode, start, path, ctx);
        benchmark::DoNotOptimize(jets);
    }
}
BENCHMARK(BM_Transport)->Args({3, 60})->Args({3, 120})->Args({4, 120});

static void BM_IntegerRelation(benchmark::State& state) {
    fp::PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    // golden-ratio relation x^2 - x - 1 = 0
    fp::Real x = (1 + sqrt(fp::Real(5))) / 2;
    std::vector<fp::Real> xs = {fp::Real(1), x, x * x};
    for (auto _ : state) {
        auto rel = fp::integer_relation(xs, fp::Int(1000000), ctx);
        benchmark::DoNotOptimize(rel);
    }
}
BENCHMARK(BM_IntegerRelation)->Arg(60)->Arg(150);

static void BM_RecognizeMinpoly(benchmark::State& state) {
    fp::PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    fp::Complex t(fp::Real(1) / 2, sqrt(fp::Real(3)) / 2);
    for (auto _ : state) {
        auto guess = fp::recognize_minpoly(t, 8, fp::Int(1000000), ctx);
        benchmark::DoNotOptimize(guess);
    }
}
BENCHMARK(BM_RecognizeMinpoly)->Arg(120);

BENCHMARK_MAIN();
