#include "padicgl/campaign.hpp"
#include "padicgl/gauss_lucas.hpp"
#include "padicgl/generator.hpp"
#include "padicgl/newton_polygon.hpp"

#include <benchmark/benchmark.h>

using namespace padic;

namespace {

Poly dense_poly(int degree) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
        coeffs.push_back(make_rational(2 * i + 1, i + 3));
    }
    return Poly(std::move(coeffs));
}

void bench_taylor_shift(benchmark::State& state) {
    Poly p = dense_poly(static_cast<int>(state.range(0)));
    Rational a = make_rational(7, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.taylor_shift(a));
    }
}

void bench_build_polygon(benchmark::State& state) {
    Poly p = dense_poly(static_cast<int>(state.range(0)));
    Prime three(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_polygon(p, three));
    }
}

void bench_root_valuations(benchmark::State& state) {
    Poly p = dense_poly(static_cast<int>(state.range(0)));
    Prime two(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(root_valuations(p, two));
    }
}

void bench_verify_theorem(benchmark::State& state) {
    Poly p = dense_poly(static_cast<int>(state.range(0)));
    Prime three(3);
    Rational center(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_theorem(p, three, center));
    }
}

void bench_campaign(benchmark::State& state) {
    GeneratorConfig config;
    config.seed = 7;
    config.primes = {Prime(2), Prime(3), Prime(5), Prime(7), Prime(11), Prime(13)};
    config.trials = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_campaign(config));
    }
}

BENCHMARK(bench_taylor_shift)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bench_build_polygon)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bench_root_valuations)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bench_verify_theorem)->Arg(8)->Arg(16)->Arg(64);
BENCHMARK(bench_campaign)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
