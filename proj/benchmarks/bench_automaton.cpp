#include <benchmark/benchmark.h>

#include <vector>

#include "frx/automaton.hpp"
#include "frx/generate.hpp"
#include "frx/normalize.hpp"
#include "frx/oracle.hpp"

namespace {

using namespace frx;

std::vector<Behavior> corpus(std::uint64_t seed, std::size_t size, GenMode mode, int count) {
    ExprGen gen(seed, {defaultAlphabet(3), size, mode});
    std::vector<Behavior> out;
    for (int i = 0; i < count; ++i) out.push_back(gen.next());
    return out;
}

void BM_Normalize(benchmark::State& state) {
    auto exprs = corpus(7, static_cast<std::size_t>(state.range(0)), GenMode::Any, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(exprs[i++ % exprs.size()]));
    }
}

void BM_ExploreCertified(benchmark::State& state) {
    auto exprs = corpus(11, 30, GenMode::Certified, 32);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(explore(exprs[i++ % exprs.size()], 5000));
    }
}

void BM_EnumerateEqualCounts(benchmark::State& state) {
    Behavior r = parse("F(x.y + y.x)*");
    for (auto _ : state) {
        benchmark::DoNotOptimize(language(r, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_Equivalence(benchmark::State& state) {
    Behavior l = parse("F(x).y");
    Behavior r = parse("x.y + y.x");
    for (auto _ : state) {
        benchmark::DoNotOptimize(equivalent(l, r, 1000));
    }
}

}  // namespace

BENCHMARK(BM_Normalize)->Arg(20)->Arg(100)->Arg(400);
BENCHMARK(BM_ExploreCertified);
BENCHMARK(BM_EnumerateEqualCounts)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_Equivalence);
