#include <benchmark/benchmark.h>

#include "glnq/gl2.hpp"
#include "glnq/green.hpp"
#include "glnq/partitions.hpp"
#include "glnq/valuations.hpp"

namespace {

void BM_partition_valuations(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    glnq::VThreshold thr{1, true};
    for (auto _ : state) {
        auto st = glnq::valuation_statistic(n, 2, thr);
        benchmark::DoNotOptimize(st.count_below);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(glnq::partition_count(n).as_u64()));
}
BENCHMARK(BM_partition_valuations)->Arg(20)->Arg(30)->Arg(40);

void BM_v2_psi(benchmark::State& state) {
    for (auto _ : state) {
        unsigned acc = 0;
        for (std::uint64_t q = 3; q <= 101; q += 2) acc += glnq::v2_psi(q, 50);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_v2_psi);

void BM_self_dual_labels(benchmark::State& state) {
    glnq::FieldFq field(3, 1);
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        glnq::Budget budget{1ull << 30};
        auto u = glnq::PolyUniverse::build(field, n, budget);
        std::uint64_t count = 0;
        glnq::enumerate_self_dual(u, n, budget, [&](const glnq::GreenLabel& mu) {
            count += glnq::degree_valuation(mu).v2;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_self_dual_labels)->Arg(4)->Arg(6);

void BM_density_scan(benchmark::State& state) {
    for (auto _ : state) {
        auto s = glnq::gl2::global_average(static_cast<std::uint64_t>(state.range(0)), 1);
        benchmark::DoNotOptimize(s.w2_zero[4]);
    }
}
BENCHMARK(BM_density_scan)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
