#include <benchmark/benchmark.h>

#include "mal/examples.hpp"
#include "mal/koszul.hpp"
#include "mal/moment_angle.hpp"

namespace {

void BM_BuildZkComplex(benchmark::State& state) {
    const auto K = mal::examples::boundary_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mal::build_zk_complex(K));
}
BENCHMARK(BM_BuildZkComplex)->Arg(3)->Arg(4)->Arg(5);

void BM_BigradedBetti(benchmark::State& state) {
    const auto K = mal::examples::boundary_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto C = mal::build_zk_complex(K);
        benchmark::DoNotOptimize(mal::bigraded_betti(C));
    }
}
BENCHMARK(BM_BigradedBetti)->Arg(3)->Arg(4)->Arg(5);

void BM_HochsterOracle(benchmark::State& state) {
    const auto K = mal::examples::boundary_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mal::hochster_oracle(K));
}
BENCHMARK(BM_HochsterOracle)->Arg(3)->Arg(4)->Arg(5);

void BM_TorDimensions(benchmark::State& state) {
    const auto K = mal::examples::boundary_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto C = mal::build_koszul_complex(K);
        benchmark::DoNotOptimize(mal::tor_dimensions(C));
    }
}
BENCHMARK(BM_TorDimensions)->Arg(3)->Arg(4)->Arg(5);

void BM_Torus9Betti(benchmark::State& state) {
    const auto K = mal::examples::torus9();
    for (auto _ : state) {
        auto C = mal::build_zk_complex(K);
        benchmark::DoNotOptimize(mal::bigraded_betti(C, 4));
    }
}
BENCHMARK(BM_Torus9Betti)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
