#include <benchmark/benchmark.h>

#include <random>

#include "sdac9/database.hpp"
#include "sdac9/equivalence.hpp"

namespace {

using namespace sdac9;

GeneratorMatrix load(const char* name) { return read_matrix_file(std::string(SDAC9_BENCH_DATA_DIR) + "/" + name); }

void BM_CoordinateGraph(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_coordinate_graph());
}
BENCHMARK(BM_CoordinateGraph);

void BM_WeightedCanonicalForm(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<WeightedGraph> graphs;
    std::uniform_int_distribution<int> w(0, 2);
    for (int k = 0; k < 64; ++k) {
        WeightedGraph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) g.set_weight(i, j, static_cast<std::uint8_t>(w(rng)));
        graphs.push_back(g);
    }
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(weighted_canonical_form(graphs[k++ % graphs.size()]));
}
BENCHMARK(BM_WeightedCanonicalForm)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_CanonicalCode(benchmark::State& state, const char* file) {
    const auto g = load(file);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK_CAPTURE(BM_CanonicalCode, n8_aut2, "n8_aut2.txt");
BENCHMARK_CAPTURE(BM_CanonicalCode, n9_aut288, "n9_aut288.txt");
BENCHMARK_CAPTURE(BM_CanonicalCode, n11_aut47520, "n11_aut47520.txt");
BENCHMARK_CAPTURE(BM_CanonicalCode, n12_aut2280960, "n12_aut2280960.txt");

}  // namespace

BENCHMARK_MAIN();
