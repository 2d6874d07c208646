#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Forkable expressions: regular expressions over an event alphabet extended
// with a fork operator F(r) whose traces interleave with whatever follows.
//
// Concrete syntax:   0 = empty language, 1 = empty word, identifiers = events,
//                    + = alternative, . (or juxtaposition) = sequence,
//                    postfix * = iteration, F(...) = fork, (...) grouping.
// `.` binds tighter than `+`, `*` binds tightest. `F`, `0`, `1` are reserved.

namespace frx {

/// A primitive event name: [A-Za-z0-9_]+, not one of the reserved words.
class Symbol {
public:
    explicit Symbol(std::string name);

    const std::string& name() const { return name_; }

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        return a.name_ <=> b.name_;
    }

    static bool isValidName(std::string_view name);

private:
    std::string name_;
};

enum class Op : std::uint8_t { Empty, Eps, Sym, Alt, Seq, Star, Fork };

/// Immutable expression tree with structural sharing. Copying is cheap.
class Behavior {
public:
    /// Defaults to the empty language.
    Behavior();

    static Behavior empty();
    static Behavior eps();
    static Behavior sym(Symbol s);
    static Behavior sym(std::string name) { return sym(Symbol(std::move(name))); }
    static Behavior alt(Behavior l, Behavior r);
    static Behavior seq(Behavior l, Behavior r);
    static Behavior star(Behavior body);
    static Behavior fork(Behavior body);

    Op op() const;
    const Symbol& symbol() const;  // op() == Sym
    Behavior left() const;         // op() == Alt | Seq
    Behavior right() const;        // op() == Alt | Seq
    Behavior body() const;         // op() == Star | Fork

    /// Node count with the empty language weighted 0, so that no behavior
    /// is smaller than 0 under the size-based order.
    std::size_t size() const;

    bool containsFork() const;

    /// Identity of the underlying node; stable key for per-call caches.
    const void* id() const { return node_.get(); }

    friend bool operator==(const Behavior& a, const Behavior& b);

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    explicit Behavior(NodePtr n) : node_(std::move(n)) {}

    NodePtr node_;

    friend std::strong_ordering compare(const Behavior&, const Behavior&);
};

/// Total order on behaviors: size first, then constructor rank
/// (Empty < Eps < Sym < Fork < Star < Seq < Alt), then children left to
/// right, symbols by name. Equivalent iff structurally identical.
std::strong_ordering compare(const Behavior& a, const Behavior& b);

inline std::strong_ordering operator<=>(const Behavior& a, const Behavior& b) {
    return compare(a, b);
}

/// Sorted duplicate-free set of symbols.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    bool contains(const Symbol& s) const;
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    Alphabet unionWith(const Alphabet& other) const;

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Symbol> symbols_;  // non-decreasing, duplicate-free
};

/// Symbols occurring in r, sorted.
Alphabet alphabet(const Behavior& r);

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses the concrete syntax above. Throws ParseError with a byte offset.
Behavior parse(std::string_view text);

/// Minimal-parentheses rendering; parse(render(r)) == r structurally.
std::string render(const Behavior& r);

}  // namespace frx
