#include <benchmark/benchmark.h>

#include "frx/decompose.hpp"
#include "frx/derivative.hpp"
#include "frx/normalize.hpp"
#include "frx/syntax.hpp"

// Matching cost over trace length. For expressions that fork inside a loop
// the canonical derivative terms grow with the trace; the MaxTermSize counter
// makes the growth visible so it can be watched, since there is no finiteness
// theorem to lean on there.

namespace {

using namespace frx;

Word alternating(std::size_t len) {
    Symbol x("x"), y("y");
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? x : y);
    return w;
}

void BM_MatchEqualCounts(benchmark::State& state) {
    Behavior r = parse("F(x.y + y.x)*");
    Word w = alternating(static_cast<std::size_t>(state.range(0)));
    std::size_t maxSize = 0;
    for (auto _ : state) {
        Canonical c = normalize(r);
        for (const Symbol& s : w) {
            c = deriveCanonical(c, s);
            maxSize = std::max(maxSize, c.term().size());
        }
        benchmark::DoNotOptimize(nullable(c.term()));
    }
    state.counters["MaxTermSize"] = static_cast<double>(maxSize);
}

void BM_MatchCertified(benchmark::State& state) {
    Behavior r = parse("F(x).(x.y)*");
    Word w = alternating(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(match(r, w));
    }
}

}  // namespace

BENCHMARK(BM_MatchEqualCounts)->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_MatchCertified)->Arg(8)->Arg(32)->Arg(128);
