#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "frx/generate.hpp"
#include "frx/oracle.hpp"
#include "frx/syntax.hpp"

// Shared helpers for the test suites.

namespace frxtest {

using namespace frx;

/// Terse expression builder.
inline Behavior B(std::string_view text) { return parse(text); }

/// Terse word builder ("x y z", "-" for the empty word).
inline Word W(std::string_view text) { return parseWord(text); }

/// Interleavings of v and w enumerated by choosing the positions v occupies
/// in the merged word. Independent of the recursive definition used by the
/// library, for cross-checking it.
inline std::set<Word> shuffleByPositions(const Word& v, const Word& w) {
    std::set<Word> out;
    std::size_t n = v.size() + w.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != v.size()) continue;
        Word merged;
        std::size_t vi = 0, wi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            merged.push_back((mask >> i) & 1 ? v[vi++] : w[wi++]);
        }
        out.insert(merged);
    }
    return out;
}

/// All node positions in r as root-to-node child-index paths.
inline void collectPaths(const Behavior& r, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
    out.push_back(prefix);
    switch (r.op()) {
        case Op::Alt:
        case Op::Seq:
            prefix.push_back(0);
            collectPaths(r.left(), prefix, out);
            prefix.back() = 1;
            collectPaths(r.right(), prefix, out);
            prefix.pop_back();
            break;
        case Op::Star:
        case Op::Fork:
            prefix.push_back(0);
            collectPaths(r.body(), prefix, out);
            prefix.pop_back();
            break;
        default:
            break;
    }
}

inline std::vector<std::vector<int>> allPaths(const Behavior& r) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    collectPaths(r, prefix, out);
    return out;
}

inline Behavior subtermAt(const Behavior& r, const std::vector<int>& path, std::size_t i = 0) {
    if (i == path.size()) return r;
    Behavior child = path[i] == 0 ? (r.op() == Op::Star || r.op() == Op::Fork ? r.body() : r.left())
                                  : r.right();
    return subtermAt(child, path, i + 1);
}

inline Behavior replaceAt(const Behavior& r, const std::vector<int>& path, const Behavior& sub,
                          std::size_t i = 0) {
    if (i == path.size()) return sub;
    switch (r.op()) {
        case Op::Alt:
            return path[i] == 0 ? Behavior::alt(replaceAt(r.left(), path, sub, i + 1), r.right())
                                : Behavior::alt(r.left(), replaceAt(r.right(), path, sub, i + 1));
        case Op::Seq:
            return path[i] == 0 ? Behavior::seq(replaceAt(r.left(), path, sub, i + 1), r.right())
                                : Behavior::seq(r.left(), replaceAt(r.right(), path, sub, i + 1));
        case Op::Star:
            return Behavior::star(replaceAt(r.body(), path, sub, i + 1));
        case Op::Fork:
            return Behavior::fork(replaceAt(r.body(), path, sub, i + 1));
        default:
            return sub;  // unreachable for well-formed paths
    }
}

/// One similarity axiom applied at the given subterm, if any applies:
/// associativity and commutativity of +, idempotence, the 0/1 unit and
/// annihilator laws, star and fork collapses. Expanding directions are
/// included so identity applications do not dominate.
inline std::optional<Behavior> applyAxiomAt(const Behavior& sub, std::mt19937_64& rng) {
    std::vector<Behavior> candidates;
    if (sub.op() == Op::Alt) {
        candidates.push_back(Behavior::alt(sub.right(), sub.left()));  // comm
        if (sub.right().op() == Op::Alt) {                             // a+(b+c) -> (a+b)+c
            candidates.push_back(Behavior::alt(Behavior::alt(sub.left(), sub.right().left()),
                                               sub.right().right()));
        }
        if (sub.left().op() == Op::Alt) {  // (a+b)+c -> a+(b+c)
            candidates.push_back(Behavior::alt(sub.left().left(),
                                               Behavior::alt(sub.left().right(), sub.right())));
        }
        if (sub.left() == sub.right()) candidates.push_back(sub.left());        // idem
        if (sub.left().op() == Op::Empty) candidates.push_back(sub.right());    // 0+a
        if (sub.right().op() == Op::Empty) candidates.push_back(sub.left());    // a+0
    }
    if (sub.op() == Op::Seq) {
        if (sub.left().op() == Op::Eps) candidates.push_back(sub.right());      // 1.a
        if (sub.right().op() == Op::Eps) candidates.push_back(sub.left());      // a.1
        if (sub.left().op() == Op::Empty || sub.right().op() == Op::Empty) {
            candidates.push_back(Behavior::empty());                            // 0.a, a.0
        }
    }
    if (sub.op() == Op::Star) {
        if (sub.body().op() == Op::Eps) candidates.push_back(Behavior::eps());   // 1*
        if (sub.body().op() == Op::Empty) candidates.push_back(Behavior::eps()); // 0*
    }
    if (sub.op() == Op::Fork) {
        if (sub.body().op() == Op::Eps) candidates.push_back(Behavior::eps());     // F(1)
        if (sub.body().op() == Op::Empty) candidates.push_back(Behavior::empty()); // F(0)
    }
    if (sub.op() == Op::Eps) {
        candidates.push_back(Behavior::star(sub));  // 1 -> 1*
        candidates.push_back(Behavior::fork(sub));  // 1 -> F(1)
    }
    if (sub.op() == Op::Empty) {
        candidates.push_back(Behavior::fork(sub));  // 0 -> F(0)
    }
    // expansions applicable everywhere
    candidates.push_back(Behavior::alt(sub, sub));                    // a -> a+a
    candidates.push_back(Behavior::alt(sub, Behavior::empty()));      // a -> a+0
    candidates.push_back(Behavior::alt(Behavior::empty(), sub));      // a -> 0+a
    candidates.push_back(Behavior::seq(Behavior::eps(), sub));        // a -> 1.a
    candidates.push_back(Behavior::seq(sub, Behavior::eps()));        // a -> a.1

    if (candidates.empty()) return std::nullopt;
    return candidates[rng() % candidates.size()];
}

/// r with one random similarity axiom applied at one random position.
inline Behavior mutateBySimilarity(const Behavior& r, std::mt19937_64& rng) {
    auto paths = allPaths(r);
    for (int attempt = 0; attempt < 16; ++attempt) {
        const auto& path = paths[rng() % paths.size()];
        if (auto rewritten = applyAxiomAt(subtermAt(r, path), rng)) {
            return replaceAt(r, path, *rewritten);
        }
    }
    return r;
}

}  // namespace frxtest
