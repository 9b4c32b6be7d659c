// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the sweep kernels: skew multiplication, right
// division, exhaustive divisor scans, bounded-weight distance, and the
// census oracle.

#include <benchmark/benchmark.h>

#include "skewlcd/census.hpp"
#include "skewlcd/grammar.hpp"
#include "skewlcd/ring.hpp"

using namespace skewlcd;

namespace {

const FieldPtr& f16() {
    static const FieldPtr f = Field::with_default_modulus(2, 4);
    return f;
}
const FieldPtr& f9() {
    static const FieldPtr f = Field::with_default_modulus(3, 2);
    return f;
}
const FieldPtr& f4() {
    static const FieldPtr f = Field::with_default_modulus(2, 2);
    return f;
}

void BM_skew_mul(benchmark::State& state) {
    const auto a = parse_poly(f9(), 1, "x^4+2*x^2+w*x+w^2");
    const auto b = parse_poly(f9(), 1, "x^6+x^4+w^5*x^3+w^5*x^2+w*x+w^2");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_skew_mul);

void BM_right_divmod(benchmark::State& state) {
    const auto m = SkewPoly::binomial(10, f9()->one(), 1);
    const auto g = parse_poly(f9(), 1, "x^4+w*x^2+1");
    for (auto _ : state) benchmark::DoNotOptimize(m.right_divmod(g));
}
BENCHMARK(BM_right_divmod);

void BM_gcrd(benchmark::State& state) {
    const auto m = SkewPoly::binomial(10, f9()->one(), 1);
    const auto g = parse_poly(f9(), 1, "x^4+w*x^2+1");
    const auto h = m.right_divmod(g).quotient;
    const auto hn = skew_reciprocal(h);
    for (auto _ : state) benchmark::DoNotOptimize(gcrd(g, hn));
}
BENCHMARK(BM_gcrd);

void BM_right_divisor_scan_f16_d3(benchmark::State& state) {
    const ConstaModulus m = ConstaModulus::create(f16(), 2, 4, f16()->one());
    for (auto _ : state)
        benchmark::DoNotOptimize(right_divisors(m, 3, 10'000'000,
                                                static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_right_divisor_scan_f16_d3)->Arg(1)->Arg(4);

void BM_min_distance_n18(benchmark::State& state) {
    const ConstaModulus m = ConstaModulus::create(f4(), 1, 18, f4()->one());
    const auto code = from_generator_poly(m, parse_poly(f4(), 1, "x^2+w*x+1"));
    for (auto _ : state) benchmark::DoNotOptimize(min_distance_bounded(code.code(), 2));
}
BENCHMARK(BM_min_distance_n18);

void BM_gray_params_36(benchmark::State& state) {
    const auto code = r_code(f4(), 1, 18, f4()->one(), f4()->zero(), parse_poly(f4(), 1, "x+w"),
                             parse_poly(f4(), 1, "x^2+w*x+1"));
    for (auto _ : state) benchmark::DoNotOptimize(gray_params(code, 2));
}
BENCHMARK(BM_gray_params_36);

void BM_census_oracle_3_4(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_census(3, 4, CensusVariant::euclidean_cyclic,
                                                    1'000'000,
                                                    static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_census_oracle_3_4)->Arg(1)->Arg(4);

void BM_census_formula_7_28(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(r_count(7, 28, RingLambda::one_minus_two_v, Inner::euclidean));
}
BENCHMARK(BM_census_formula_7_28);

}  // namespace

BENCHMARK_MAIN();
