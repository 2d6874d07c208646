#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frx/syntax.hpp"

// Reproducible random behaviors for fuzzing and property suites. The same
// seed yields the same stream on every platform (mt19937_64 plus plain
// modulo reduction, no library distributions).
//
// Distribution, by remaining size budget n:
//   n <= 1           leaf:      symbol 6 : epsilon 2 : empty 1
//   n >= 2           operator:  seq 4 : alt 3 : star 2 : fork 2 : leaf 2
// Binary operators split the remaining budget uniformly; star and fork
// recurse with budget n - 1. Certified mode generates fork-free bodies under
// every star; fork-free mode never generates forks at all.

namespace frx {

enum class GenMode { Any, ForkFree, Certified };

struct GenOptions {
    std::vector<Symbol> alphabet;
    std::size_t maxSize = 15;
    GenMode mode = GenMode::Any;
};

class ExprGen {
public:
    ExprGen(std::uint64_t seed, GenOptions options);

    Behavior next();

private:
    std::uint64_t below(std::uint64_t n);
    Behavior gen(std::size_t budget, bool forkAllowed);

    std::mt19937_64 rng_;
    GenOptions options_;
};

/// Convenience alphabet {a, b, c, ...} of the requested size (max 26).
std::vector<Symbol> defaultAlphabet(std::size_t count);

}  // namespace frx
