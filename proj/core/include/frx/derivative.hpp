#pragma once

#include "frx/normalize.hpp"
#include "frx/oracle.hpp"
#include "frx/syntax.hpp"

// Brzozowski derivatives extended to forkable expressions. Sequences feed
// the concurrent part of the head into the tail, and loops admit leading
// concurrent-only iterations, mirroring the sequential-part decomposition:
//
//   d(r.s) = d(r).s + conc(r).d(s)
//   d(r*)  = conc(r)* . d(r) . r*
//   d(F r) = F(d r)
//
// and the remaining cases are the classical ones. d(r) denotes the left
// quotient of L(r) by the symbol, which makes the word problem decidable:
// w in L(r) iff the derivative by w is nullable.

namespace frx {

/// Raw single-symbol derivative, no simplification. The verbatim recursion
/// is kept separate from the normalizing layer because some of its algebraic
/// properties (e.g. conc(d(conc r)) == d(conc r)) hold syntactically.
Behavior derive(const Behavior& r, const Symbol& x);

/// Normalized derivative; well defined on similarity classes.
Canonical deriveCanonical(const Canonical& c, const Symbol& x);

/// Left fold of deriveCanonical over the word, starting from normalize(r).
Canonical deriveWord(const Behavior& r, const Word& w);

/// Word problem: nullable(derivative of r by w).
bool match(const Behavior& r, const Word& w);

}  // namespace frx
