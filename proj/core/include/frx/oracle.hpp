#pragma once

#include <set>
#include <string>
#include <vector>

#include "frx/syntax.hpp"

// Bounded-length enumeration of trace languages, exact up to the bound.
//
// The trace language of a behavior with continuation language K:
//
//   L(0,K) = {}          L(r+s,K) = L(r,K) u L(s,K)
//   L(1,K) = K           L(r.s,K) = L(r, L(s,K))
//   L(x,K) = {x}.K       L(r*,K)  = least X with X = L(r,X) u K
//                        L(F r,K) = L(r,{eps}) interleaved with K
//   L(r) = L(r,{eps})
//
// Everything here computes the exact truncation {w in L(r,K) : |w| <= n}.
// Why truncation is sound: every clause above is monotone in K, and a word
// of length <= n in L(r,K) only ever consumes continuation words of length
// <= n (the continuation contributes a suffix, or a scattered subword in the
// fork case, so its length never exceeds the result's). Hence truncating K
// to length <= n first loses nothing below n, by induction on r; for the
// star clause both fixpoints are computed over the finite lattice of word
// sets of length <= n, where Kleene iteration from the empty set reaches the
// least fixpoint in finitely many steps and agrees with the truncation of
// the unbounded least fixpoint. This is what makes bounded enumeration a
// trustworthy reference for the algebraic operations in the rest of the
// library.

namespace frx {

using Word = std::vector<Symbol>;

/// Space-separated symbol list; the empty word is spelled "-".
Word parseWord(std::string_view text);
std::string renderWord(const Word& w);

/// Finite set of words, all of length <= bound.
class BoundedLanguage {
public:
    explicit BoundedLanguage(std::size_t bound) : bound_(bound) {}

    static BoundedLanguage epsilonOnly(std::size_t bound);

    std::size_t bound() const { return bound_; }
    const std::set<Word>& words() const& { return words_; }
    std::set<Word> words() && { return std::move(words_); }  // keeps rvalue loops safe
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    bool contains(const Word& w) const { return words_.count(w) != 0; }

    /// Silently drops words longer than the bound.
    void insert(Word w);
    void insertAll(const BoundedLanguage& other);

    BoundedLanguage truncated(std::size_t newBound) const;

    /// Words sorted by length, then lexicographically.
    std::vector<Word> sortedByLength() const;

    friend bool operator==(const BoundedLanguage&, const BoundedLanguage&) = default;

private:
    std::set<Word> words_;
    std::size_t bound_;
};

/// All interleavings of v and w; each result has length |v| + |w|.
std::set<Word> shuffleWords(const Word& v, const Word& w);

/// Union of pairwise interleavings, truncated to the bound.
BoundedLanguage shuffleLanguages(const BoundedLanguage& l, const BoundedLanguage& m,
                                 std::size_t bound);

/// {w in L(r,K) : |w| <= bound}. K is truncated to the bound first.
BoundedLanguage traceLanguage(const Behavior& r, const BoundedLanguage& k, std::size_t bound);

/// {w in L(r) : |w| <= bound}.
BoundedLanguage language(const Behavior& r, std::size_t bound);

/// Classical regular-expression semantics, truncated. Deliberately a separate
/// code path from traceLanguage (direct word-set concatenation instead of
/// continuation passing) so the two can be checked against each other on
/// fork-free input. Throws std::invalid_argument if r contains a fork.
BoundedLanguage regularLanguage(const Behavior& r, std::size_t bound);

/// {w : x.w in l}; the bound drops by one.
BoundedLanguage leftQuotient(const Symbol& x, const BoundedLanguage& l);

/// w in L(r), decided by enumeration at bound |w|.
bool memberOracle(const Behavior& r, const Word& w);

}  // namespace frx
