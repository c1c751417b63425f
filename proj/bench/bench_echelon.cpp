// Serial vs OpenMP echelon reduction on total-complex boundary matrices.

#include <benchmark/benchmark.h>

#include "indhom/echelon.hpp"
#include "indhom/families.hpp"
#include "indhom/marking_complex.hpp"

namespace {

using namespace indhom;

// Largest boundary of (T, D) for the graph; built once per graph.
const IntMatrix& total_boundary(int which) {
    static const std::vector<IntMatrix> mats = [] {
        std::vector<IntMatrix> out;
        for (const Graph& g : {families::cycle(8), families::cube_skeleton(), families::petersen()}) {
            ChainComplex t = total_complex(BigradedComplex(g, 1));
            const IntMatrix* best = nullptr;
            for (int n = t.min_degree() + 1; n <= t.max_degree(); ++n) {
                const IntMatrix& m = t.stored_boundary(n);
                if (!best || m.rows() * m.cols() > best->rows() * best->cols()) best = &m;
            }
            out.push_back(*best);
        }
        return out;
    }();
    return mats.at(static_cast<std::size_t>(which));
}

void run(benchmark::State& state, Exec exec) {
    const IntMatrix& src = total_boundary(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        IntMatrix m = src;
        benchmark::DoNotOptimize(echelon_reduce(m, exec).rank);
    }
    state.SetLabel(std::to_string(src.rows()) + "x" + std::to_string(src.cols()));
}

void BM_EchelonSerial(benchmark::State& state) { run(state, Exec::serial); }
void BM_EchelonParallel(benchmark::State& state) { run(state, Exec::parallel); }

// 0 = C_8, 1 = cube, 2 = Petersen
BENCHMARK(BM_EchelonSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EchelonParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
