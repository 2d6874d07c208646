#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "frx/normalize.hpp"
#include "frx/oracle.hpp"
#include "frx/syntax.hpp"

// Derivative automata. States are canonical forms of iterated derivatives,
// one representative per similarity class; acceptance is nullability. The
// construction terminates exactly when the set of dissimilar derivatives is
// finite, which forking inside a loop can defeat — hence the certification
// check: a starred subterm whose body normalizes to a fork-free expression
// can never leave non-trivial concurrent behavior behind, and an expression
// all of whose starred subterms pass is guaranteed a finite state space.

namespace frx {

/// Certification outcome for one starred subterm.
struct StarCheck {
    Behavior subterm;        // the starred subterm itself
    Canonical bodyNormal;    // normalized star body
    bool certified;          // bodyNormal is fork-free
};

struct WellBehavedReport {
    std::vector<StarCheck> stars;  // one entry per distinct starred subterm
    bool certified;                // all entries certified
};

/// Sufficient-condition check: certified means every starred body normalizes
/// to a fork-free expression. Never a false positive; a failed check reports
/// "unknown", not "ill-behaved".
WellBehavedReport checkWellBehaved(const Behavior& r);

/// Complete deterministic automaton over the expression's own alphabet.
class Dfa {
public:
    Dfa(std::vector<Canonical> states, Alphabet alphabet,
        std::vector<std::vector<std::size_t>> transitions);

    const std::vector<Canonical>& states() const { return states_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t start() const { return 0; }
    const std::vector<std::size_t>& accepting() const { return accepting_; }
    bool isAccepting(std::size_t state) const;

    /// transitions()[state][i] is the successor on the i-th alphabet symbol.
    const std::vector<std::vector<std::size_t>>& transitions() const { return transitions_; }

    /// Runs the word; symbols outside the alphabet reject.
    bool accepts(const Word& w) const;

private:
    std::vector<Canonical> states_;
    Alphabet alphabet_;
    std::vector<std::vector<std::size_t>> transitions_;
    std::vector<std::size_t> accepting_;
};

/// The state cap was hit: a property of the input, not a failure.
struct StateExplosion {
    std::vector<Canonical> states;    // distinct states found before giving up
    std::vector<Canonical> frontier;  // discovered but not yet expanded
    std::size_t maxStates;
};

using ExploreResult = std::variant<Dfa, StateExplosion>;

constexpr std::size_t kDefaultMaxStates = 10000;

/// Breadth-first closure of the canonical derivative from normalize(r).
ExploreResult explore(const Behavior& r, std::size_t maxStates = kDefaultMaxStates);

struct StateCount {
    std::size_t count;  // exact, or the cap
    bool atLeast;       // true when the cap was reached
};

/// Number of dissimilar descendants if below cap, else at-least-cap.
StateCount countReachableStates(const Behavior& r, std::size_t cap);

enum class ContainsStatus {
    Contained,
    NotContained,   // witness word attached
    NotCertified,   // an operand failed certification and force was off
    StateExplosion, // pair closure exceeded maxStates
};

struct ContainsResult {
    ContainsStatus status;
    Word witness;               // shortest counterexample when NotContained
    std::size_t pairsExplored;
};

/// L(r) subset of L(s), decided on the product of the two derivative state
/// spaces. Requires both operands certified unless force is set, in which
/// case the traversal is best effort under maxStates: a negative answer is
/// always definitive (the witness is checkable), a positive answer is
/// definitive when the closure completed.
ContainsResult contains(const Behavior& r, const Behavior& s,
                        std::size_t maxStates = kDefaultMaxStates, bool force = false);

/// Mutual containment in a single product traversal.
ContainsResult equivalent(const Behavior& r, const Behavior& s,
                          std::size_t maxStates = kDefaultMaxStates, bool force = false);

/// Graphviz digraph, byte-deterministic: states in index order, edges in
/// alphabet order, accepting states double-circled.
std::string toDot(const Dfa& d);

/// {"states":[...],"alphabet":[...],"start":0,"accepting":[...],
///  "transitions":[[from,"symbol",to],...]}, same deterministic order.
std::string toJson(const Dfa& d);

}  // namespace frx
