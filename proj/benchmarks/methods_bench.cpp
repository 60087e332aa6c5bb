#include <benchmark/benchmark.h>

#include "jacobsthal/identity.hpp"
#include "jacobsthal/matrix_seq.hpp"
#include "jacobsthal/scalar_seq.hpp"

using namespace jacobsthal;

namespace
{

    void BM_MatrixPower(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(matrix_term(MatFamily::Jacobsthal, n, MatMethod::Power));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_MatrixPower)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

    void BM_MatrixExplicit(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(matrix_term(MatFamily::Jacobsthal, n, MatMethod::Explicit));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_MatrixExplicit)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

    void BM_MatrixBinet(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(matrix_term(MatFamily::Jacobsthal, n, MatMethod::Binet));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_MatrixBinet)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

    void BM_MatrixRecurrence(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(matrix_term(MatFamily::Jacobsthal, n, MatMethod::Recurrence));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_MatrixRecurrence)->RangeMultiplier(8)->Range(8, 1 << 12)->Complexity();

    void BM_ScalarBinet(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(term_binet(SeqId::Jacobsthal3, n));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_ScalarBinet)->RangeMultiplier(8)->Range(8, 1 << 18)->Complexity();

    void BM_ScalarCyclotomic(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(term_binet_cyclotomic(SeqId::Jacobsthal3, n));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_ScalarCyclotomic)->RangeMultiplier(8)->Range(8, 1 << 18)->Complexity();

    void BM_ScalarRecurrence(benchmark::State &state)
    {
        const SeqIndex n = state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(term_recurrence(SeqId::Jacobsthal3, n));
        state.SetComplexityN(n);
    }
    BENCHMARK(BM_ScalarRecurrence)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

    // negative indices go through the dyadic backward pass
    void BM_ScalarRecurrenceNegative(benchmark::State &state)
    {
        const SeqIndex n = -state.range(0);
        for (auto _ : state)
            benchmark::DoNotOptimize(term_recurrence(SeqId::Jacobsthal3, n));
    }
    BENCHMARK(BM_ScalarRecurrenceNegative)->RangeMultiplier(8)->Range(8, 1 << 12);

    void BM_VerifyAll(benchmark::State &state)
    {
        VerifyOptions options;
        options.threads = static_cast<std::size_t>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(verify_all({0, 50}, {}, options));
    }
    BENCHMARK(BM_VerifyAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
