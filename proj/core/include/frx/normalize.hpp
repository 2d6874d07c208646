#pragma once

#include <string>
#include <vector>

#include "frx/syntax.hpp"

// Canonical forms for similarity: associativity, commutativity and
// idempotence of +, the unit and annihilator laws of 0 and 1, star and fork
// collapses (0* -> 1, 1* -> 1, F(0) -> 0, F(1) -> 1), and commutation of
// adjacent fork factors in a product. Two behaviors are similar exactly when
// their canonical forms are structurally identical; similar behaviors have
// the same trace language.
//
// A canonical term contains no subterm of the shape 1.r, r.1, 0.r, r.0, 1*,
// 0*, F(1), F(0), 0+r, r+0 or r+r; its sums are right-nested, strictly
// ascending in the total order, and duplicate free; its products are
// right-nested with adjacent fork factors in non-decreasing order.

namespace frx {

/// A behavior in canonical form. Only obtainable through normalize() and the
/// smart constructors, so holding one is proof of canonicality.
class Canonical {
public:
    /// The canonical empty language.
    Canonical() : term_(Behavior::empty()) {}

    const Behavior& term() const { return term_; }

    friend bool operator==(const Canonical& a, const Canonical& b) {
        return a.term_ == b.term_;
    }
    friend std::strong_ordering operator<=>(const Canonical& a, const Canonical& b) {
        return compare(a.term_, b.term_);
    }

private:
    explicit Canonical(Behavior term) : term_(std::move(term)) {}

    Behavior term_;

    friend Canonical normalize(const Behavior&);
    friend Canonical normalize(const Behavior&, std::vector<std::string>& trace);
    friend Canonical altN(const Canonical&, const Canonical&);
    friend Canonical seqN(const Canonical&, const Canonical&);
    friend Canonical starN(const Canonical&);
    friend Canonical forkN(const Canonical&);
};

/// Canonical alternative: sorted duplicate-free merge.
Canonical altN(const Canonical& r, const Canonical& s);

/// Canonical sequence: annihilation, units, right-nesting, adjacent fork
/// factors bubble into order.
Canonical seqN(const Canonical& r, const Canonical& s);

/// Canonical star: 0* and 1* collapse to 1.
Canonical starN(const Canonical& r);

/// Canonical fork: F(0) -> 0, F(1) -> 1.
Canonical forkN(const Canonical& r);

/// Bottom-up rebuild through the smart constructors. Idempotent and
/// language-preserving.
Canonical normalize(const Behavior& r);

/// As above, also records one line per simplification applied.
Canonical normalize(const Behavior& r, std::vector<std::string>& trace);

/// Similarity test: canonical forms coincide structurally.
bool similar(const Behavior& r, const Behavior& s);

}  // namespace frx
