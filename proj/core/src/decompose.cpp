#include "frx/decompose.hpp"

namespace frx {

Behavior concPart(const Behavior& r) {
    switch (r.op()) {
        case Op::Empty:
        case Op::Eps:
            return r;
        case Op::Sym:
            return Behavior::empty();
        case Op::Alt:
            return Behavior::alt(concPart(r.left()), concPart(r.right()));
        case Op::Seq:
            return Behavior::seq(concPart(r.left()), concPart(r.right()));
        case Op::Star:
            return Behavior::star(concPart(r.body()));
        case Op::Fork:
            return r;  // the fork node itself, unchanged
    }
    return Behavior::empty();
}

Behavior seqPart(const Behavior& r) {
    switch (r.op()) {
        case Op::Empty:
            return Behavior::empty();
        case Op::Eps:
            return Behavior::empty();
        case Op::Sym:
            return r;
        case Op::Alt:
            return Behavior::alt(seqPart(r.left()), seqPart(r.right()));
        case Op::Seq:
            return Behavior::alt(Behavior::seq(seqPart(r.left()), r.right()),
                                 Behavior::seq(concPart(r.left()), seqPart(r.right())));
        case Op::Star: {
            Behavior body = r.body();
            return Behavior::seq(Behavior::star(concPart(body)),
                                 Behavior::seq(seqPart(body), r));
        }
        case Op::Fork:
            return Behavior::empty();
    }
    return Behavior::empty();
}

bool nullable(const Behavior& r) {
    switch (r.op()) {
        case Op::Empty:
            return false;
        case Op::Eps:
            return true;
        case Op::Sym:
            return false;
        case Op::Alt:
            return nullable(r.left()) || nullable(r.right());
        case Op::Seq:
            return nullable(r.left()) && nullable(r.right());
        case Op::Star:
            return true;
        case Op::Fork:
            return nullable(r.body());
    }
    return false;
}

bool isEmpty(const Behavior& r) {
    switch (r.op()) {
        case Op::Empty:
            return true;
        case Op::Eps:
            return false;
        case Op::Sym:
            return false;
        case Op::Alt:
            return isEmpty(r.left()) && isEmpty(r.right());
        case Op::Seq:
            return isEmpty(r.left()) || isEmpty(r.right());
        case Op::Star:
            return false;
        case Op::Fork:
            return isEmpty(r.body());
    }
    return false;
}

}  // namespace frx
