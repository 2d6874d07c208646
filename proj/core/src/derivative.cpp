#include "frx/derivative.hpp"

#include "frx/decompose.hpp"

namespace frx {

Behavior derive(const Behavior& r, const Symbol& x) {
    switch (r.op()) {
        case Op::Empty:
        case Op::Eps:
            return Behavior::empty();
        case Op::Sym:
            return r.symbol() == x ? Behavior::eps() : Behavior::empty();
        case Op::Alt:
            return Behavior::alt(derive(r.left(), x), derive(r.right(), x));
        case Op::Seq:
            return Behavior::alt(Behavior::seq(derive(r.left(), x), r.right()),
                                 Behavior::seq(concPart(r.left()), derive(r.right(), x)));
        case Op::Star:
            // conc(r)* absorbs iterations that contribute only pending forks
            // before the one that yields the first symbol; without it the
            // derivative misses words whose head comes from a later
            // iteration, e.g. aba in (a.a + F(b))*. When the body is similar
            // to a fork-free expression the prefix normalizes to 1 and the
            // classical d(r).r* shape reappears.
            return Behavior::seq(Behavior::star(concPart(r.body())),
                                 Behavior::seq(derive(r.body(), x), r));
        case Op::Fork:
            return Behavior::fork(derive(r.body(), x));
    }
    return Behavior::empty();
}

Canonical deriveCanonical(const Canonical& c, const Symbol& x) {
    return normalize(derive(c.term(), x));
}

Canonical deriveWord(const Behavior& r, const Word& w) {
    Canonical c = normalize(r);
    for (const Symbol& x : w) c = deriveCanonical(c, x);
    return c;
}

bool match(const Behavior& r, const Word& w) {
    return nullable(deriveWord(r, w).term());
}

}  // namespace frx
