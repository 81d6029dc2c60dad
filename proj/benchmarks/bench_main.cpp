#include "rootnum/averaging.hpp"
#include "rootnum/descent.hpp"
#include "rootnum/fiber.hpp"
#include "rootnum/modform.hpp"
#include "rootnum/polytext.hpp"
#include "rootnum/sieve.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace rootnum;

namespace {

void BM_FactorizeSemiprime(benchmark::State& state) {
    const Integer n = Integer("1000000007") * Integer("998244353") * Integer(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_FactorizeSemiprime)->Arg(1)->Arg(65537);

void BM_LiouvilleTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(liouville_table(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_LiouvilleTable)->Arg(1 << 16)->Arg(1 << 20);

void BM_FiberRootNumber(benchmark::State& state) {
    const EllipticSurface s{parse_ratfunc("1 + t"), parse_ratfunc("-1 + 3*t")};
    const PairSampler w = root_number_sampler(s);
    const std::int64_t x = state.range(0);
    std::int64_t y = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(w(x, y));
        do y = y % 97 + 1;
        while (std::gcd(x, y) != 1);
    }
}
BENCHMARK(BM_FiberRootNumber)->Arg(7)->Arg(1001);

void BM_SweepLambdaBox(benchmark::State& state) {
    const BiPoly P = parse_bipoly("x*y*(x+y)");
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_lambda_poly(P, Sector::full(), LatticeCoset(), state.range(0)));
}
BENCHMARK(BM_SweepLambdaBox)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CensusCubic(benchmark::State& state) {
    const IntPoly f{2, 0, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(census(f, state.range(0), 200));
}
BENCHMARK(BM_CensusCubic)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ClassNumber(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(class_number(-4 * state.range(0)));
}
BENCHMARK(BM_ClassNumber)->Arg(1009)->Arg(99991);

void BM_CanonicalHeight(benchmark::State& state) {
    const WeierstrassTwist E{1, 0, -2, 0};
    const CurvePoint P = CurvePoint::at(2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_height(E, P, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CanonicalHeight)->Arg(4)->Arg(6);

void BM_TwistSearch(benchmark::State& state) {
    const HomPoly F(3, {Integer(1), Integer(0), Integer(0), Integer(2)});
    for (auto _ : state) benchmark::DoNotOptimize(twist_point_search(F, 1, state.range(0)));
}
BENCHMARK(BM_TwistSearch)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
