#pragma once

#include "frx/syntax.hpp"

// Decomposition of a behavior into a concurrent part (what may still happen
// alongside the continuation) and a sequential part (what must happen next),
// plus the syntactic nullability and emptiness tests.
//
// Both parts are returned as raw, unsimplified trees mirroring the defining
// recursion one to one; normalization is a separate step. That keeps
// identities such as concPart(concPart(r)) == concPart(r) testable as
// structural equalities.

namespace frx {

/// Concurrent part:
///   |0| = 0, |1| = 1, |x| = 0, distributes over +, ., *, and |F r| = F r.
Behavior concPart(const Behavior& r);

/// Sequential part:
///   |0| = 0, |1| = 0, |x| = x, distributes over +,
///   |r.s| = |r|.s + conc(r).|s|, |r*| = conc(r)*.|r|.r*, |F r| = 0.
Behavior seqPart(const Behavior& r);

/// Whether the empty word belongs to L(r). (The symbol case is false:
/// L(x) = {x} does not contain the empty word.)
bool nullable(const Behavior& r);

/// Whether L(r) is empty.
bool isEmpty(const Behavior& r);

}  // namespace frx
