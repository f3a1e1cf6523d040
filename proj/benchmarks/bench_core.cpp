#include <benchmark/benchmark.h>

#include <rankforge/code.hpp>
#include <rankforge/corpus.hpp>
#include <rankforge/field.hpp>
#include <rankforge/linalg.hpp>
#include <rankforge/macwilliams.hpp>
#include <rankforge/mrd.hpp>

using namespace rankforge;

static void BM_FieldMul(benchmark::State& state) {
    auto F = FieldSpec::make(2, static_cast<std::uint32_t>(state.range(0)), {}, 1);
    std::uint64_t a = 1, acc = 0;
    for (auto _ : state) {
        a = (a % (F->order() - 1)) + 1;
        acc ^= F->mul(a, a + 1 < F->order() ? a + 1 : 1);
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_Rank3x3(benchmark::State& state) {
    auto F3 = FieldSpec::make(3, 1);
    Rng rng(1);
    std::vector<MatrixFq> pool;
    for (int i = 0; i < 64; ++i) pool.push_back(random_matrix(F3, 3, 3, rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(rank(pool[i++ % pool.size()]));
}
BENCHMARK(BM_Rank3x3);

static void BM_WeightDistribution(benchmark::State& state) {
    auto F2 = FieldSpec::make(2, 1);
    Rng rng(2);
    auto C = random_linear_code(F2, 3, 3, static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(C));
}
BENCHMARK(BM_WeightDistribution)->Arg(4)->Arg(6)->Arg(8);

static void BM_MacwilliamsTransform(benchmark::State& state) {
    auto F2 = FieldSpec::make(2, 1);
    Rng rng(3);
    auto C = random_linear_code(F2, 3, 3, 4, rng);
    auto W = weight_distribution(C);
    CodeParams params(2, 3, 3, C.size());
    for (auto _ : state) benchmark::DoNotOptimize(macwilliams_transform(W, params));
}
BENCHMARK(BM_MacwilliamsTransform);

static void BM_EnumerateSubspaces(benchmark::State& state) {
    auto F3 = FieldSpec::make(3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(F3, 4, 2));
}
BENCHMARK(BM_EnumerateSubspaces);

static void BM_GabidulinExpand(benchmark::State& state) {
    auto spec = FieldSpec::make_tower(2, 4);
    auto basis = ExtensionBasis::polynomial_basis(spec);
    for (auto _ : state) {
        auto C = gabidulin_code(GabidulinSpec(spec, 4, 2));
        benchmark::DoNotOptimize(gamma_expand(C, basis));
    }
}
BENCHMARK(BM_GabidulinExpand);

static void BM_DualCode(benchmark::State& state) {
    auto F2 = FieldSpec::make(2, 1);
    Rng rng(4);
    auto C = random_linear_code(F2, 4, 4, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(dual_code(C));
}
BENCHMARK(BM_DualCode);

BENCHMARK_MAIN();
