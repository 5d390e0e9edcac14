// Serial reference vs OpenMP population evaluation on the case study.
#include "fjsp/ga.hpp"
#include "fjsp/io.hpp"

#include <benchmark/benchmark.h>

namespace {

struct Fixture {
    fjsp::ProblemInstance instance = fjsp::embedded_case_study();
    fjsp::GeneMap map{instance};
    fjsp::Population population;

    explicit Fixture(std::size_t size) {
        fjsp::Rng rng(7);
        population = fjsp::init_population(map, size, rng);
    }
};

void BM_EvaluateSerial(benchmark::State &state) {
    const Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto out = fjsp::evaluate_population_serial(f.instance, f.map, f.population, {}, {});
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateParallel(benchmark::State &state) {
    const Fixture f(static_cast<std::size_t>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto out = fjsp::evaluate_population(f.instance, f.map, f.population, {}, {}, threads);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Repair(benchmark::State &state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    fjsp::Rng rng(11);
    for (auto _ : state) {
        for (auto &c : f.population) {
            fjsp::mutate(c, 0.05, f.map, rng);
            fjsp::repair(c, f.map);
        }
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_EvaluateParallel)->Args({100, 1})->Args({100, 2})->Args({100, 4})->Args({1000, 4});
BENCHMARK(BM_Repair)->Arg(100);

BENCHMARK_MAIN();
