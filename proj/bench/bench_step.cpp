// Serial reference kernel vs OpenMP kernel on square grids.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "leachate/kernels.hpp"
#include "leachate/transport.hpp"

namespace {

using leachate::GridSpec;

struct Setup {
    GridSpec grid;
    leachate::StencilCoefficients k;
    std::vector<double> in;
    std::vector<double> out;

    explicit Setup(int n) : grid{n, n, 0.1, 0.1}, in(grid.node_count()), out(grid.node_count()) {
        leachate::TransportParams p;
        p.D = 0.547945;
        p.v = 0.01;
        p.theta = 0.3;
        p.C0 = 675.0;
        k = leachate::make_coefficients(grid, p, 0.002, leachate::Scheme::upwind,
                                        leachate::SideBoundary::neumann_zero_flux);
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(0.0, 675.0);
        for (auto& c : in) c = u(rng);
    }
};

void BM_StepSerial(benchmark::State& state) {
    Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        leachate::advance_interior_serial(s.k, s.grid, s.in, s.out);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.grid.node_count()));
}

void BM_StepOpenMP(benchmark::State& state) {
    Setup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        leachate::advance_interior_omp(s.k, s.grid, s.in, s.out);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.grid.node_count()));
}

}  // namespace

BENCHMARK(BM_StepSerial)->Arg(11)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_StepOpenMP)->Arg(11)->Arg(128)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
