#include <benchmark/benchmark.h>

#include "sdac9/classify.hpp"
#include "sdac9/database.hpp"

namespace {

using namespace sdac9;

GeneratorMatrix load(const char* name) { return read_matrix_file(std::string(SDAC9_BENCH_DATA_DIR) + "/" + name); }

void BM_WeightDistribution(benchmark::State& state, const char* file) {
    const auto g = load(file);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(g));
}
BENCHMARK_CAPTURE(BM_WeightDistribution, n8, "n8_aut2.txt");
BENCHMARK_CAPTURE(BM_WeightDistribution, n12, "n12_aut2280960.txt");

void BM_DistanceFilter(benchmark::State& state) {
    const auto g = load("n12_aut2280960.txt");
    for (auto _ : state) benchmark::DoNotOptimize(has_codeword_of_weight_at_most(g, 5));
}
BENCHMARK(BM_DistanceFilter);

void BM_GeneratingSet(benchmark::State& state) {
    const auto g = load("n12_aut2280960.txt");
    for (auto _ : state) benchmark::DoNotOptimize(generating_set_by_weight(g));
}
BENCHMARK(BM_GeneratingSet);

void BM_ToStandardForm(benchmark::State& state) {
    const auto g = load("n4_c.txt");
    for (auto _ : state) benchmark::DoNotOptimize(to_standard_form(g));
}
BENCHMARK(BM_ToStandardForm);

void BM_ClassifyUpTo(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify_up_to(n));
}
BENCHMARK(BM_ClassifyUpTo)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
