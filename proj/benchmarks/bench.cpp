#include <benchmark/benchmark.h>

#include "umet/embedding.hpp"
#include "umet/oracles.hpp"

using namespace umet;
using namespace umet::oracles;

namespace {

const RangeSet kRange({Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});

std::vector<StepFunction> sample_functions(std::size_t depth, std::size_t count) {
    Lcg gen(2024);
    std::vector<StepFunction> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_step_function(depth, kRange, gen));
    return out;
}

void BM_NablaSup(benchmark::State& state) {
    const auto fns = sample_functions(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nabla_sup(fns[i % 32], fns[(i + 1) % 32]));
        ++i;
    }
}
BENCHMARK(BM_NablaSup)->Arg(3)->Arg(5)->Arg(7);

void BM_BruteNabla(benchmark::State& state) {
    const auto fns = sample_functions(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_nabla(fns[i % 32], fns[(i + 1) % 32]));
        ++i;
    }
}
BENCHMARK(BM_BruteNabla)->Arg(3)->Arg(5)->Arg(7);

void BM_UdDirect(benchmark::State& state) {
    Lcg gen(2025);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FiniteUltraSpace d = random_ultrametric(n, kRange, gen);
    const FiniteUltraSpace e = random_ultrametric(n, kRange, gen);
    for (auto _ : state) benchmark::DoNotOptimize(ud_direct(d, e));
}
BENCHMARK(BM_UdDirect)->Arg(8)->Arg(32);

void BM_UdViaQuotients(benchmark::State& state) {
    Lcg gen(2025);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FiniteUltraSpace d = random_ultrametric(n, kRange, gen);
    const FiniteUltraSpace e = random_ultrametric(n, kRange, gen);
    for (auto _ : state) benchmark::DoNotOptimize(ud_via_quotients(d, e));
}
BENCHMARK(BM_UdViaQuotients)->Arg(8)->Arg(32);

void BM_EmbedFunctions(benchmark::State& state) {
    Lcg gen(2026);
    const FiniteUltraSpace space =
        random_ultrametric(static_cast<std::size_t>(state.range(0)), kRange, gen);
    for (auto _ : state) benchmark::DoNotOptimize(embed_space(space));
}
BENCHMARK(BM_EmbedFunctions)->Arg(4)->Arg(7);

void BM_EmbedMetrics(benchmark::State& state) {
    Lcg gen(2026);
    const FiniteUltraSpace space =
        random_ultrametric(static_cast<std::size_t>(state.range(0)), kRange, gen);
    for (auto _ : state) benchmark::DoNotOptimize(embed_space_into_metrics(space));
}
BENCHMARK(BM_EmbedMetrics)->Arg(4)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
