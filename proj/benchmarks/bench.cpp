#include <benchmark/benchmark.h>

#include <numeric>

#include "qsfill/enumerate.hpp"
#include "qsfill/hj.hpp"

using namespace qsfill;

static void BM_HJAllPairs(benchmark::State& state) {
    const auto limit = state.range(0);
    for (auto _ : state) {
        std::size_t terms = 0;
        for (std::int64_t n = 2; n <= limit; ++n)
            for (std::int64_t q = 1; q < n; ++q)
                if (std::gcd(n, q) == 1) terms += hj_dual(hj_expand(n, q)).terms.size();
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_HJAllPairs)->Arg(50)->Arg(200);

static void BM_Enumerate(benchmark::State& state, const char* id, unsigned threads) {
    auto s = SingularityId::parse(id);
    SearchCaps caps;
    caps.threads = threads;
    for (auto _ : state) benchmark::DoNotOptimize(search_fillings(s, caps));
}
BENCHMARK_CAPTURE(BM_Enumerate, T19, "T:19", 1);
BENCHMARK_CAPTURE(BM_Enumerate, I97, "I:97", 1);
BENCHMARK_CAPTURE(BM_Enumerate, I113_case2, "I:113", 1);
BENCHMARK_CAPTURE(BM_Enumerate, I241_generic, "I:241", 1);
BENCHMARK_CAPTURE(BM_Enumerate, I241_generic_4threads, "I:241", 4);
BENCHMARK_CAPTURE(BM_Enumerate, A13_5, "A:13,5", 1);
BENCHMARK_MAIN();
