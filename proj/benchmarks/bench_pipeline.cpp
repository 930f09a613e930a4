#include <benchmark/benchmark.h>

#include <dedekind/finite_ring.hpp>
#include <dedekind/order.hpp>
#include <dedekind/quotient.hpp>

using namespace dedekind;

namespace {

/* Z[x]/(x^n - g): same construction as the fixture files. */
OrderPresentation monogenic(const std::vector<long>& low) {
    const std::size_t n = low.size();
    std::vector<std::vector<Int>> powers(2 * n - 1, std::vector<Int>(n));
    for (std::size_t s = 0; s < n; ++s) powers[s][s] = 1;
    for (std::size_t s = n; s < 2 * n - 1; ++s) {
        std::vector<Int> cur(n);
        for (std::size_t t = 1; t < n; ++t) cur[t] = powers[s - 1][t - 1];
        const Int& carry = powers[s - 1][n - 1];
        if (carry != 0)
            for (std::size_t t = 0; t < n; ++t) cur[t] += carry * Int(low[t]);
        powers[s] = std::move(cur);
    }
    std::vector<Int> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = powers[i + j][k];
    std::vector<Int> one(n);
    one[0] = 1;
    return OrderPresentation(n, std::move(table), std::move(one));
}

void BM_norm_multiple_zeta8(benchmark::State& state) {
    OrderPresentation O = monogenic({-1, 0, 0, 0});
    TwoGenIdeal I{O.element({Int(999983), Int(314159), Int(-271828), Int(161803)}),
                  O.element({Int(1000003), Int(-999999), Int(123456), Int(654321)})};
    for (auto _ : state) benchmark::DoNotOptimize(norm_multiple(O, I));
}
BENCHMARK(BM_norm_multiple_zeta8);

void BM_output_basis_scaled(benchmark::State& state) {
    OrderPresentation O = monogenic({-1, 0, 0, 0});
    const long p = state.range(0);
    TwoGenIdeal I{O.element({Int(p), Int(0), Int(0), Int(0)}),
                  O.element({Int(0), Int(p), Int(0), Int(0)})};
    const Int h = norm_multiple(O, I);
    for (auto _ : state) benchmark::DoNotOptimize(output_basis(O, I, h));
}
BENCHMARK(BM_output_basis_scaled)->Arg(101)->Arg(1000003);

void BM_is_field_quotient(benchmark::State& state) {
    OrderPresentation O = monogenic({-1, 0, 0, 0});
    const long p = state.range(0);
    TwoGenIdeal I{O.element({Int(p), Int(0), Int(0), Int(0)}),
                  O.element({Int(0), Int(p), Int(0), Int(0)})};
    auto qb = output_basis(O, I, norm_multiple(O, I));
    for (auto _ : state) benchmark::DoNotOptimize(is_field(qb->ring));
}
BENCHMARK(BM_is_field_quotient)->Arg(101)->Arg(1000003);

void BM_is_local_quotient(benchmark::State& state) {
    OrderPresentation O = monogenic({-1, 0});
    TwoGenIdeal I{O.element({Int(64), Int(0)}), O.element({Int(0), Int(64)})};
    auto qb = output_basis(O, I, norm_multiple(O, I));
    for (auto _ : state) benchmark::DoNotOptimize(is_local(qb->ring));
}
BENCHMARK(BM_is_local_quotient);

}  // namespace

BENCHMARK_MAIN();
