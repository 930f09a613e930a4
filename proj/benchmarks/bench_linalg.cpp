#include <benchmark/benchmark.h>

#include <random>

#include <dedekind/exact_linalg.hpp>

using namespace dedekind;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = Int(dist(rng));
    return M;
}

void BM_det_modular(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix M = random_matrix(rng, n, 2147483647L);
    for (auto _ : state) benchmark::DoNotOptimize(det_modular(M));
}
BENCHMARK(BM_det_modular)->Arg(10)->Arg(30)->Arg(50);

void BM_hadamard_bound(benchmark::State& state) {
    std::mt19937_64 rng(2);
    IntMatrix M = random_matrix(rng, 50, 2147483647L);
    for (auto _ : state) benchmark::DoNotOptimize(hadamard_bound(M));
}
BENCHMARK(BM_hadamard_bound);

void BM_hnf_with_transform(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix M = random_matrix(rng, n, 1000);
    while (det_modular(M) == 0) M = random_matrix(rng, n, 1000);
    for (auto _ : state) benchmark::DoNotOptimize(hnf_with_transform(M));
}
BENCHMARK(BM_hnf_with_transform)->Arg(4)->Arg(8);

void BM_hnf_basis_mod(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix M = random_matrix(rng, n, 1000);
    while (det_modular(M) == 0) M = random_matrix(rng, n, 1000);
    const Int h = int_abs(det_modular(M));
    for (auto _ : state) benchmark::DoNotOptimize(hnf_basis_mod(M, h));
}
BENCHMARK(BM_hnf_basis_mod)->Arg(4)->Arg(8);

void BM_snf_with_transforms(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix M = random_matrix(rng, n, 1000);
    while (det_modular(M) == 0) M = random_matrix(rng, n, 1000);
    const Int h = int_abs(det_modular(M));
    for (auto _ : state) benchmark::DoNotOptimize(snf_with_transforms(M, h));
}
BENCHMARK(BM_snf_with_transforms)->Arg(4)->Arg(8);

void BM_inverse_mod(benchmark::State& state) {
    std::mt19937_64 rng(6);
    const std::size_t n = 8;
    IntMatrix V = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> q(-3, 3);
    for (int t = 0; t < 60; ++t) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        for (std::size_t c = 0; c < n; ++c) V(i, c) += Int(q(rng)) * V(j, c);
    }
    const Int h("1000000000000000000000000007");
    for (auto _ : state) benchmark::DoNotOptimize(inverse_mod(V, h));
}
BENCHMARK(BM_inverse_mod);

}  // namespace

BENCHMARK_MAIN();
