#include "frx/normalize.hpp"

namespace frx {

namespace {

bool is(const Behavior& r, Op op) { return r.op() == op; }

void note(std::vector<std::string>* trace, const char* rule, const std::string& from,
          const std::string& to) {
    if (trace) trace->push_back(std::string(rule) + ": " + from + " -> " + to);
}

// All helpers below assume their Behavior arguments are already canonical.

Behavior altT(const Behavior& r, const Behavior& s, std::vector<std::string>* trace);

Behavior insertMonomial(const Behavior& r, const Behavior& s, std::vector<std::string>* trace) {
    // r is a canonical non-sum monomial, s a canonical sum or monomial.
    if (is(s, Op::Alt)) {
        Behavior head = s.left();
        if (r == head) {
            note(trace, "Idemp", render(r) + " + " + render(r), render(r));
            return s;
        }
        if (compare(r, head) == std::strong_ordering::less) return Behavior::alt(r, s);
        return Behavior::alt(head, insertMonomial(r, s.right(), trace));
    }
    if (r == s) {
        note(trace, "Idemp", render(r) + " + " + render(r), render(r));
        return r;
    }
    if (compare(r, s) == std::strong_ordering::less) return Behavior::alt(r, s);
    return Behavior::alt(s, r);
}

Behavior altT(const Behavior& r, const Behavior& s, std::vector<std::string>* trace) {
    if (is(r, Op::Empty)) {
        if (trace && !is(s, Op::Empty)) note(trace, "U", "0 + " + render(s), render(s));
        return s;
    }
    if (is(s, Op::Empty)) {
        note(trace, "U", render(r) + " + 0", render(r));
        return r;
    }
    if (is(r, Op::Alt)) return altT(r.left(), altT(r.right(), s, trace), trace);
    return insertMonomial(r, s, trace);
}

Behavior seqT(const Behavior& r, const Behavior& s, std::vector<std::string>* trace) {
    if (is(r, Op::Empty) || is(s, Op::Empty)) {
        if (trace && !(is(r, Op::Empty) && is(s, Op::Empty))) {
            note(trace, "EL", render(r) + "." + render(s), "0");
        }
        return Behavior::empty();
    }
    if (is(r, Op::Eps)) {
        note(trace, "EW", "1." + render(s), render(s));
        return s;
    }
    if (is(s, Op::Eps)) {
        note(trace, "EW", render(r) + ".1", render(r));
        return r;
    }
    if (is(r, Op::Seq)) return seqT(r.left(), seqT(r.right(), s, trace), trace);
    if (is(r, Op::Fork)) {
        // Adjacent fork factors commute; keep them in ascending body order.
        if (is(s, Op::Fork) && compare(s.body(), r.body()) == std::strong_ordering::less) {
            note(trace, "FC", render(r) + "." + render(s), render(s) + "." + render(r));
            return Behavior::seq(s, r);
        }
        if (is(s, Op::Seq) && is(s.left(), Op::Fork) &&
            compare(s.left().body(), r.body()) == std::strong_ordering::less) {
            note(trace, "FC", render(r) + "." + render(s.left()),
                 render(s.left()) + "." + render(r));
            return Behavior::seq(s.left(), seqT(r, s.right(), trace));
        }
    }
    return Behavior::seq(r, s);
}

Behavior starT(const Behavior& r, std::vector<std::string>* trace) {
    if (is(r, Op::Empty) || is(r, Op::Eps)) {
        note(trace, is(r, Op::Empty) ? "EL" : "EW", render(r) + "*", "1");
        return Behavior::eps();
    }
    return Behavior::star(r);
}

Behavior forkT(const Behavior& r, std::vector<std::string>* trace) {
    if (is(r, Op::Empty)) {
        note(trace, "EL", "F(0)", "0");
        return r;
    }
    if (is(r, Op::Eps)) {
        note(trace, "EW", "F(1)", "1");
        return r;
    }
    return Behavior::fork(r);
}

Behavior normalizeT(const Behavior& r, std::vector<std::string>* trace) {
    switch (r.op()) {
        case Op::Empty:
        case Op::Eps:
        case Op::Sym:
            return r;
        case Op::Alt:
            return altT(normalizeT(r.left(), trace), normalizeT(r.right(), trace), trace);
        case Op::Seq:
            return seqT(normalizeT(r.left(), trace), normalizeT(r.right(), trace), trace);
        case Op::Star:
            return starT(normalizeT(r.body(), trace), trace);
        case Op::Fork:
            return forkT(normalizeT(r.body(), trace), trace);
    }
    return r;
}

}  // namespace

Canonical altN(const Canonical& r, const Canonical& s) {
    return Canonical(altT(r.term(), s.term(), nullptr));
}

Canonical seqN(const Canonical& r, const Canonical& s) {
    return Canonical(seqT(r.term(), s.term(), nullptr));
}

Canonical starN(const Canonical& r) { return Canonical(starT(r.term(), nullptr)); }

Canonical forkN(const Canonical& r) { return Canonical(forkT(r.term(), nullptr)); }

Canonical normalize(const Behavior& r) { return Canonical(normalizeT(r, nullptr)); }

Canonical normalize(const Behavior& r, std::vector<std::string>& trace) {
    return Canonical(normalizeT(r, &trace));
}

bool similar(const Behavior& r, const Behavior& s) {
    return normalize(r) == normalize(s);
}

}  // namespace frx
