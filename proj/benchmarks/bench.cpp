#include "ffdesign/contrast.hpp"
#include "ffdesign/enumerate.hpp"
#include "ffdesign/indicator.hpp"
#include "ffdesign/relations.hpp"
#include "ffdesign/symmetry.hpp"

#include <benchmark/benchmark.h>

using namespace ffd;

namespace {

Fraction alternating_fraction(const DesignSpace& space) {
    Fraction f = empty_fraction(space);
    for (std::size_t k = 0; k < f.y.size(); k += 2) f.y[k] = 1;
    return f;
}

void bm_model_matrix(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(space.model_matrix());
}
BENCHMARK(bm_model_matrix);

void bm_indicator_solve(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 3});
    auto f = alternating_fraction(space);
    for (auto _ : state) benchmark::DoNotOptimize(indicator_of(space, f));
}
BENCHMARK(bm_indicator_solve);

void bm_relation_system(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(relation_system(space));
}
BENCHMARK(bm_relation_system);

void bm_contrast_matrix(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(contrast_matrix(space));
}
BENCHMARK(bm_contrast_matrix);

void bm_enumerate_2x2x2x3(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 3});
    for (auto _ : state) {
        auto result = enumerate_orthogonal(space, 12, 2);
        benchmark::DoNotOptimize(result.solutions.size());
    }
}
BENCHMARK(bm_enumerate_2x2x2x3);

void bm_canonical_form(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 3});
    auto group = symmetry_group(space);
    auto f = alternating_fraction(space);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(space, group, f));
}
BENCHMARK(bm_canonical_form);

void bm_classify_44(benchmark::State& state) {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 3});
    auto solutions = enumerate_orthogonal(space, 12, 2).solutions;
    for (auto _ : state) benchmark::DoNotOptimize(classify(space, solutions));
}
BENCHMARK(bm_classify_44);

} // namespace

BENCHMARK_MAIN();
