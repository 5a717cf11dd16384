#include <subcat/generation.hpp>
#include <subcat/realization.hpp>
#include <subcat/tools/corpus.hpp>
#include <subcat/tools/random.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace subcat;

void primo_mimicry(benchmark::State & state)
{
    auto ws = tools::bundled_workspace();
    const auto & family = ws.family("mimicry");
    for (auto _ : state)
        benchmark::DoNotOptimize(primo_engender(family));
}
BENCHMARK(primo_mimicry);

void primo_random(benchmark::State & state)
{
    tools::Rng rng(static_cast<std::uint64_t>(state.range(0)));
    tools::RandomFamilyOptions options;
    options.max_index = 3;
    options.max_instants = 8;
    auto family = tools::random_family(rng, options);
    for (auto _ : state)
        benchmark::DoNotOptimize(primo_engender(family));
}
BENCHMARK(primo_random)->DenseRange(1, 4);

void mono_random(benchmark::State & state)
{
    tools::Rng rng(static_cast<std::uint64_t>(state.range(0)));
    auto family = tools::random_family(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(mono_engender(family));
}
BENCHMARK(mono_random)->DenseRange(1, 4);

void realizations_random(benchmark::State & state)
{
    tools::Rng rng(11);
    auto clock = tools::random_clock(rng, tools::random_motor(rng), static_cast<std::size_t>(state.range(0)));
    tools::RandomOpenOptions options;
    options.max_states = static_cast<std::size_t>(state.range(0));
    auto open = tools::random_open(rng, clock, options);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_realizations(open));
}
BENCHMARK(realizations_random)->Arg(4)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
