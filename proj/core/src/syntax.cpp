#include "frx/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace frx {

namespace {

bool isIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool isReserved(std::string_view name) {
    return name == "0" || name == "1" || name == "F";
}

}  // namespace

bool Symbol::isValidName(std::string_view name) {
    if (name.empty() || isReserved(name)) return false;
    return std::all_of(name.begin(), name.end(), isIdentChar);
}

Symbol::Symbol(std::string name) : name_(std::move(name)) {
    if (!isValidName(name_)) {
        throw std::invalid_argument("invalid symbol name: '" + name_ + "'");
    }
}

struct Behavior::Node {
    Op op;
    std::uint32_t size;
    bool hasFork;
    std::optional<Symbol> sym;
    NodePtr a;  // left child, or star/fork body
    NodePtr b;  // right child
};

Behavior Behavior::empty() {
    static const NodePtr n = std::make_shared<Node>(Node{Op::Empty, 0, false, {}, {}, {}});
    return Behavior(n);
}

Behavior Behavior::eps() {
    static const NodePtr n = std::make_shared<Node>(Node{Op::Eps, 1, false, {}, {}, {}});
    return Behavior(n);
}

Behavior::Behavior() : node_(empty().node_) {}

Behavior Behavior::sym(Symbol s) {
    return Behavior(std::make_shared<Node>(Node{Op::Sym, 1, false, std::move(s), {}, {}}));
}

Behavior Behavior::alt(Behavior l, Behavior r) {
    auto size = static_cast<std::uint32_t>(1 + l.size() + r.size());
    bool fk = l.containsFork() || r.containsFork();
    return Behavior(std::make_shared<Node>(
        Node{Op::Alt, size, fk, {}, std::move(l.node_), std::move(r.node_)}));
}

Behavior Behavior::seq(Behavior l, Behavior r) {
    auto size = static_cast<std::uint32_t>(1 + l.size() + r.size());
    bool fk = l.containsFork() || r.containsFork();
    return Behavior(std::make_shared<Node>(
        Node{Op::Seq, size, fk, {}, std::move(l.node_), std::move(r.node_)}));
}

Behavior Behavior::star(Behavior body) {
    auto size = static_cast<std::uint32_t>(1 + body.size());
    bool fk = body.containsFork();
    return Behavior(
        std::make_shared<Node>(Node{Op::Star, size, fk, {}, std::move(body.node_), {}}));
}

Behavior Behavior::fork(Behavior body) {
    auto size = static_cast<std::uint32_t>(1 + body.size());
    return Behavior(
        std::make_shared<Node>(Node{Op::Fork, size, true, {}, std::move(body.node_), {}}));
}

Op Behavior::op() const { return node_->op; }

std::size_t Behavior::size() const { return node_->size; }

bool Behavior::containsFork() const { return node_->hasFork; }

const Symbol& Behavior::symbol() const { return *node_->sym; }

Behavior Behavior::left() const { return Behavior(node_->a); }

Behavior Behavior::right() const { return Behavior(node_->b); }

Behavior Behavior::body() const { return Behavior(node_->a); }

namespace {

int rank(Op op) {
    switch (op) {
        case Op::Empty: return 0;
        case Op::Eps: return 1;
        case Op::Sym: return 2;
        case Op::Fork: return 3;
        case Op::Star: return 4;
        case Op::Seq: return 5;
        case Op::Alt: return 6;
    }
    return 7;
}

}  // namespace

std::strong_ordering compare(const Behavior& a, const Behavior& b) {
    if (a.id() == b.id()) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = rank(a.op()) <=> rank(b.op()); c != 0) return c;
    switch (a.op()) {
        case Op::Empty:
        case Op::Eps:
            return std::strong_ordering::equal;
        case Op::Sym:
            return a.symbol() <=> b.symbol();
        case Op::Star:
        case Op::Fork:
            return compare(a.body(), b.body());
        case Op::Seq:
        case Op::Alt:
            if (auto c = compare(a.left(), b.left()); c != 0) return c;
            return compare(a.right(), b.right());
    }
    return std::strong_ordering::equal;
}

bool operator==(const Behavior& a, const Behavior& b) {
    return compare(a, b) == std::strong_ordering::equal;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

bool Alphabet::contains(const Symbol& s) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

Alphabet Alphabet::unionWith(const Alphabet& other) const {
    std::vector<Symbol> all = symbols_;
    all.insert(all.end(), other.symbols_.begin(), other.symbols_.end());
    return Alphabet(std::move(all));
}

namespace {

void collectSymbols(const Behavior& r, std::vector<Symbol>& out) {
    switch (r.op()) {
        case Op::Empty:
        case Op::Eps:
            return;
        case Op::Sym:
            out.push_back(r.symbol());
            return;
        case Op::Alt:
        case Op::Seq:
            collectSymbols(r.left(), out);
            collectSymbols(r.right(), out);
            return;
        case Op::Star:
        case Op::Fork:
            collectSymbols(r.body(), out);
            return;
    }
}

}  // namespace

Alphabet alphabet(const Behavior& r) {
    std::vector<Symbol> out;
    collectSymbols(r, out);
    return Alphabet(std::move(out));
}

ParseError::ParseError(std::string message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

// Recursive descent over
//   expr   := term ('+' term)*
//   term   := factor ('.'? factor)*
//   factor := atom '*'*
//   atom   := '0' | '1' | ident | 'F' '(' expr ')' | '(' expr ')'
// '+' and '.' chains associate to the right, matching the right-nesting
// that normalization produces, so canonical terms render without parentheses.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Behavior run() {
        skipWs();
        if (atEnd()) throw ParseError("empty input", pos_);
        Behavior r = parseExpr();
        skipWs();
        if (!atEnd()) throw ParseError("unexpected input", pos_);
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skipWs() {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool startsAtom() {
        skipWs();
        if (atEnd()) return false;
        return peek() == '(' || isIdentChar(peek());
    }

    Behavior parseExpr() {
        std::vector<Behavior> terms;
        terms.push_back(parseTerm());
        while (true) {
            skipWs();
            if (atEnd() || peek() != '+') break;
            ++pos_;
            terms.push_back(parseTerm());
        }
        Behavior r = terms.back();
        for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
            r = Behavior::alt(*it, r);
        }
        return r;
    }

    Behavior parseTerm() {
        std::vector<Behavior> factors;
        factors.push_back(parseFactor());
        while (true) {
            skipWs();
            if (!atEnd() && peek() == '.') {
                ++pos_;
                factors.push_back(parseFactor());
            } else if (startsAtom()) {
                factors.push_back(parseFactor());
            } else {
                break;
            }
        }
        Behavior r = factors.back();
        for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) {
            r = Behavior::seq(*it, r);
        }
        return r;
    }

    Behavior parseFactor() {
        Behavior r = parseAtom();
        while (true) {
            skipWs();
            if (atEnd() || peek() != '*') break;
            ++pos_;
            r = Behavior::star(r);
        }
        return r;
    }

    Behavior parseAtom() {
        skipWs();
        if (atEnd()) throw ParseError("expected expression", pos_);
        if (peek() == '(') {
            std::size_t open = pos_;
            ++pos_;
            Behavior r = parseExpr();
            skipWs();
            if (atEnd() || peek() != ')') {
                throw ParseError("unbalanced parenthesis opened", open);
            }
            ++pos_;
            return r;
        }
        if (!isIdentChar(peek())) throw ParseError("expected expression", pos_);
        std::size_t start = pos_;
        while (!atEnd() && isIdentChar(peek())) ++pos_;
        std::string word(text_.substr(start, pos_ - start));
        if (word == "0") return Behavior::empty();
        if (word == "1") return Behavior::eps();
        if (word == "F") {
            skipWs();
            if (atEnd() || peek() != '(') throw ParseError("expected '(' after 'F'", pos_);
            std::size_t open = pos_;
            ++pos_;
            Behavior body = parseExpr();
            skipWs();
            if (atEnd() || peek() != ')') {
                throw ParseError("unbalanced parenthesis opened", open);
            }
            ++pos_;
            return Behavior::fork(body);
        }
        return Behavior::sym(Symbol(std::move(word)));
    }
};

// Precedence levels for rendering: 0 = alternative, 1 = sequence, 2 = star
// body, 3 = atom. A node is parenthesized when its own level is below what
// the context requires.
int level(const Behavior& r) {
    switch (r.op()) {
        case Op::Alt: return 0;
        case Op::Seq: return 1;
        case Op::Star: return 2;
        default: return 3;
    }
}

void renderInto(const Behavior& r, int required, std::string& out) {
    bool parens = level(r) < required;
    if (parens) out += '(';
    switch (r.op()) {
        case Op::Empty:
            out += '0';
            break;
        case Op::Eps:
            out += '1';
            break;
        case Op::Sym:
            out += r.symbol().name();
            break;
        case Op::Alt:
            // right chains stay flat, left-nested alternatives need parens
            renderInto(r.left(), 1, out);
            out += " + ";
            renderInto(r.right(), 0, out);
            break;
        case Op::Seq:
            renderInto(r.left(), 2, out);
            out += '.';
            renderInto(r.right(), 1, out);
            break;
        case Op::Star:
            renderInto(r.body(), 2, out);
            out += '*';
            break;
        case Op::Fork:
            out += "F(";
            renderInto(r.body(), 0, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Behavior parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Behavior& r) {
    std::string out;
    renderInto(r, 0, out);
    return out;
}

}  // namespace frx
