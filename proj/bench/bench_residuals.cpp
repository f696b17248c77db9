// Serial reference against the OpenMP residual kernel.
#include <benchmark/benchmark.h>

#include "qgrushin/harness.hpp"
#include "qgrushin/solutions.hpp"

using namespace qgrushin;

namespace {

const SolutionSpec& drift_spec() {
    static const SolutionSpec s = derive_driftform({0, 1, 1, 1}, 4.0, {2, 0.0, 0.0, -2.0});
    return s;
}

void BM_Serial(benchmark::State& state) {
    const DomainSpec dom{0.1, 10.0, 0.05, static_cast<int>(state.range(0)), 42};
    for (auto _ : state) benchmark::DoNotOptimize(run_residuals_serial(drift_spec(), OperatorTag::DriftFormFull, dom));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OpenMP(benchmark::State& state) {
    const DomainSpec dom{0.1, 10.0, 0.05, static_cast<int>(state.range(0)), 42};
    for (auto _ : state) benchmark::DoNotOptimize(run_residuals(drift_spec(), OperatorTag::DriftFormFull, dom));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SerialFD(benchmark::State& state) {
    const DomainSpec dom{0.1, 10.0, 0.05, static_cast<int>(state.range(0)), 42};
    const RunOptions opt{EvalMode::FD, std::nullopt, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(run_residuals_serial(drift_spec(), OperatorTag::DriftFormFull, dom, opt));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OpenMPFD(benchmark::State& state) {
    const DomainSpec dom{0.1, 10.0, 0.05, static_cast<int>(state.range(0)), 42};
    const RunOptions opt{EvalMode::FD, std::nullopt, {}};
    for (auto _ : state) benchmark::DoNotOptimize(run_residuals(drift_spec(), OperatorTag::DriftFormFull, dom, opt));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(200)->Arg(5000)->UseRealTime();
BENCHMARK(BM_OpenMP)->Arg(200)->Arg(5000)->UseRealTime();
BENCHMARK(BM_SerialFD)->Arg(200)->Arg(2000)->UseRealTime();
BENCHMARK(BM_OpenMPFD)->Arg(200)->Arg(2000)->UseRealTime();

BENCHMARK_MAIN();
