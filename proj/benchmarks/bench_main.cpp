#include <benchmark/benchmark.h>

#include "generators.hpp"

#include "degen/polydisk.hpp"
#include "degen/quiver.hpp"
#include "degen/ratlin.hpp"

using namespace degen;

static void BM_Rank(benchmark::State& state) {
    testing::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = testing::random_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

static void BM_Decompose(benchmark::State& state) {
    testing::Rng rng(2);
    const auto m = testing::random_multiset(rng, static_cast<std::size_t>(state.range(0)), true);
    QuiverRep rep = build(m);
    rep = change_basis(rep, testing::random_invertible(rng, rep.psi_dim()), testing::random_invertible(rng, rep.phi_dim()));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_indecomposables(rep));
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(16);

static void BM_Koszul(benchmark::State& state) {
    testing::Rng rng(3);
    const auto h = testing::random_commuting(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(koszul_cohomology_dims(koszul_complex(h, {})));
}
BENCHMARK(BM_Koszul)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
