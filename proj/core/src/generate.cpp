#include "frx/generate.hpp"

#include <stdexcept>

namespace frx {

ExprGen::ExprGen(std::uint64_t seed, GenOptions options)
    : rng_(seed), options_(std::move(options)) {}

std::uint64_t ExprGen::below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

Behavior ExprGen::next() {
    return gen(options_.maxSize, options_.mode != GenMode::ForkFree);
}

Behavior ExprGen::gen(std::size_t budget, bool forkAllowed) {
    if (budget >= 2) {
        std::uint64_t forkWeight = forkAllowed ? 2 : 0;
        std::uint64_t binaryWeight = budget >= 3 ? 7 : 0;  // seq 4 + alt 3 need two children
        std::uint64_t pick = below(binaryWeight + 2 + forkWeight + 2);
        if (binaryWeight != 0 && pick < 4) {  // seq
            std::size_t rest = budget - 1;
            std::size_t left = 1 + static_cast<std::size_t>(below(rest - 1));
            return Behavior::seq(gen(left, forkAllowed), gen(rest - left, forkAllowed));
        }
        if (binaryWeight != 0 && pick < 7) {  // alt
            std::size_t rest = budget - 1;
            std::size_t left = 1 + static_cast<std::size_t>(below(rest - 1));
            return Behavior::alt(gen(left, forkAllowed), gen(rest - left, forkAllowed));
        }
        if (pick < binaryWeight + 2) {  // star: certified mode keeps forks out of the body
            bool bodyForks = forkAllowed && options_.mode != GenMode::Certified;
            return Behavior::star(gen(budget - 1, bodyForks));
        }
        if (pick < binaryWeight + 2 + forkWeight) {  // fork
            return Behavior::fork(gen(budget - 1, forkAllowed));
        }
        // fall through to a leaf
    }
    std::uint64_t leafPick = below(9);
    if (leafPick < 6 && !options_.alphabet.empty()) {
        return Behavior::sym(options_.alphabet[static_cast<std::size_t>(
            below(options_.alphabet.size()))]);
    }
    return leafPick < 8 ? Behavior::eps() : Behavior::empty();
}

std::vector<Symbol> defaultAlphabet(std::size_t count) {
    if (count > 26) throw std::invalid_argument("defaultAlphabet: at most 26 symbols");
    std::vector<Symbol> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    }
    return out;
}

}  // namespace frx
