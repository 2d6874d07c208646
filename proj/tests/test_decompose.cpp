#include "doctest.h"
#include "frx/decompose.hpp"
#include "frx/normalize.hpp"
#include "test_util.hpp"

using namespace frxtest;

TEST_CASE("concPart mirrors the defining table") {
    CHECK(concPart(B("x")) == Behavior::empty());
    CHECK(concPart(B("F(x.y)")) == B("F(x.y)"));  // fork kept whole
    // raw tree, no simplification; it normalizes to 0
    Behavior raw = concPart(B("x.F(y)"));
    CHECK(raw == Behavior::seq(Behavior::empty(), B("F(y)")));
    CHECK(normalize(raw).term() == Behavior::empty());
    CHECK(concPart(B("1")) == Behavior::eps());
    CHECK(concPart(B("x*")) == Behavior::star(Behavior::empty()));
}

TEST_CASE("seqPart mirrors the defining table") {
    CHECK(seqPart(B("F(x)")) == Behavior::empty());
    CHECK(seqPart(B("x")) == B("x"));
    Behavior raw = seqPart(B("x.y"));
    CHECK(raw == Behavior::alt(B("x.y"), Behavior::seq(Behavior::empty(), B("y"))));
    CHECK(normalize(raw).term() == B("x.y"));
    // star case: conc(r)* . seq(r) . r*
    CHECK(seqPart(B("x*")) ==
          Behavior::seq(Behavior::star(Behavior::empty()),
                        Behavior::seq(B("x"), B("x*"))));
}

TEST_CASE("concPart is syntactically idempotent") {
    ExprGen gen(41, {defaultAlphabet(3), 20, GenMode::Any});
    for (int i = 0; i < 500; ++i) {
        Behavior c = concPart(gen.next());
        CHECK(concPart(c) == c);
    }
}

TEST_CASE("decomposition covers the language") {
    ExprGen gen(43, {defaultAlphabet(2), 12, GenMode::Any});
    for (int i = 0; i < 150; ++i) {
        Behavior r = gen.next();
        CHECK(language(r, 4) == language(Behavior::alt(concPart(r), seqPart(r)), 4));
    }
}

TEST_CASE("cross applications of the parts annihilate") {
    ExprGen gen(47, {defaultAlphabet(2), 10, GenMode::Any});
    for (int i = 0; i < 80; ++i) {
        Behavior r = gen.next();
        CHECK(language(concPart(seqPart(r)), 4).empty());
        CHECK(language(seqPart(concPart(r)), 4).empty());
        CHECK(language(seqPart(seqPart(r)), 4) == language(seqPart(r), 4));
    }
}

TEST_CASE("nullable") {
    CHECK(nullable(B("0*")));
    CHECK_FALSE(nullable(B("x")));
    CHECK_FALSE(nullable(B("F(x.y)")));
    CHECK(nullable(B("F(x*)")));
    CHECK(nullable(B("1.x + 1")));

    ExprGen gen(53, {defaultAlphabet(2), 12, GenMode::Any});
    for (int i = 0; i < 200; ++i) {
        Behavior r = gen.next();
        bool expected = memberOracle(r, {});
        CHECK(nullable(r) == expected);
        // nullability is explained by the concurrent part
        CHECK(nullable(concPart(r)) == expected);
    }
}

TEST_CASE("isEmpty") {
    CHECK(isEmpty(B("x.0")));
    CHECK_FALSE(isEmpty(B("0*")));
    CHECK_FALSE(isEmpty(B("F(0 + x)")));

    // at size <= 12 a non-empty language always has a word of length <= 6,
    // so the bounded check is exact in both directions
    ExprGen gen(59, {defaultAlphabet(2), 12, GenMode::Any});
    for (int i = 0; i < 200; ++i) {
        Behavior r = gen.next();
        CHECK(isEmpty(r) == language(r, 6).empty());
    }
}
