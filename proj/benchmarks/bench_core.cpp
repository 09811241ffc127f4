#include <benchmark/benchmark.h>

#include <random>

#include "awnev/decompose.hpp"
#include "awnev/parser.hpp"
#include "awnev/quadrature.hpp"
#include "awnev/wronskian.hpp"

namespace {

using namespace awnev;

const AwContext kCtx{Rat(1, 2)};

std::vector<RatFunc> fixed_tuple(int n, int degree) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<RatFunc> fs;
    for (int i = 0; i <= n; ++i) {
        std::vector<Rat> cs(static_cast<std::size_t>(degree) + 1);
        for (auto& c : cs) c = Rat(coeff(rng), 2);
        if (cs.back() == 0) cs.back() = Rat(1);
        fs.push_back(RatFunc::from(XPoly(cs)));
    }
    return fs;
}

void BM_ParseExpression(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_xpoly("(x - 2)^3 * (x + 1/2) - 7/3 * x^2 + 1"));
}
BENCHMARK(BM_ParseExpression);

void BM_AwDiff(benchmark::State& state) {
    RatFunc f = RatFunc::from(parse_xpoly("x^8 - 3*x^5 + x - 1/2"));
    for (auto _ : state) benchmark::DoNotOptimize(ops::aw_diff(f, kCtx));
}
BENCHMARK(BM_AwDiff);

void BM_Wronskian(benchmark::State& state) {
    FunctionTuple tuple(fixed_tuple(static_cast<int>(state.range(0)), 4), kCtx);
    for (auto _ : state) benchmark::DoNotOptimize(wron::wronskian(tuple));
}
BENCHMARK(BM_Wronskian)->Arg(1)->Arg(2)->Arg(3);

void BM_WronskianShiftForm(benchmark::State& state) {
    FunctionTuple tuple(fixed_tuple(static_cast<int>(state.range(0)), 4), kCtx);
    for (auto _ : state) benchmark::DoNotOptimize(wron::wronskian_shift_form(tuple));
}
BENCHMARK(BM_WronskianShiftForm)->Arg(1)->Arg(2)->Arg(3);

void BM_GreedyDecompose(benchmark::State& state) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> degree(1, 20);
    std::vector<int> degrees(static_cast<std::size_t>(state.range(0)));
    for (int& d : degrees) d = degree(rng);
    decomp::DegreeMultiset ds(degrees);
    for (auto _ : state)
        benchmark::DoNotOptimize(decomp::greedy_decompose(ds, 3).first.max_degree());
}
BENCHMARK(BM_GreedyDecompose)->Arg(10)->Arg(40);

void BM_BruteForceMinmax(benchmark::State& state) {
    decomp::DegreeMultiset ds({6, 5, 5, 5, 5, 5, 3, 2, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(decomp::brute_force_minmax(ds, 3));
}
BENCHMARK(BM_BruteForceMinmax);

void BM_ProximityQuadrature(benchmark::State& state) {
    RatFunc f = RatFunc::from(parse_xpoly("x^3 - 2*x + 1/2"));
    for (auto _ : state)
        benchmark::DoNotOptimize(proximity_m(f, 100.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ProximityQuadrature)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
