#include "frobhh/hochschild.hpp"
#include "frobhh/io.hpp"
#include "frobhh/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace frobhh;

namespace {

const AlgebraSpec& taft3()
{
    static const AlgebraSpec s = constructor_spec("taft:3", 13);
    return s;
}

void BM_TaftDifferential(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hochschild_differential(taft3().algebra, n, true));
}
BENCHMARK(BM_TaftDifferential)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TaftDifferentialRank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const SparseMatrix b = hochschild_differential(taft3().algebra, n, true);
    const PrimeField& f = taft3().algebra.field();
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(f, b));
    state.counters["rows"] = static_cast<double>(b.rows());
    state.counters["cols"] = static_cast<double>(b.cols());
}
BENCHMARK(BM_TaftDifferentialRank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TaftHH(benchmark::State& state)
{
    HochschildOptions o;
    o.max_degree = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hh_dims(taft3().algebra, o));
}
BENCHMARK(BM_TaftHH)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_RandomRank(benchmark::State& state)
{
    const PrimeField f(13);
    const auto size = static_cast<std::size_t>(state.range(0));
    const bool sparse = state.range(1) != 0;
    std::mt19937_64 rng(1);
    std::bernoulli_distribution coin(0.05);
    std::uniform_int_distribution<std::uint32_t> value(1, 12);
    DenseMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (coin(rng))
                m(i, j) = Scalar{value(rng)};
    const SparseMatrix s = SparseMatrix::from_dense(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(sparse ? rank(f, s) : rank_dense(f, m));
}
BENCHMARK(BM_RandomRank)->ArgsProduct({{100, 400}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
