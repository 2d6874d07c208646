#include "doctest.h"
#include "test_util.hpp"

using namespace frxtest;

TEST_CASE("parse reserved tokens and fork") {
    CHECK(parse("0") == Behavior::empty());
    CHECK(parse("1") == Behavior::eps());
    Behavior example1 = Behavior::star(Behavior::fork(
        Behavior::alt(Behavior::seq(Behavior::sym("x"), Behavior::sym("y")),
                      Behavior::seq(Behavior::sym("y"), Behavior::sym("x")))));
    CHECK(parse("F(x.y + y.x)*") == example1);
}

TEST_CASE("parse precedence and grouping") {
    CHECK(parse("x + y.z*") ==
          Behavior::alt(Behavior::sym("x"),
                        Behavior::seq(Behavior::sym("y"), Behavior::star(Behavior::sym("z")))));
    CHECK(parse("x y") == parse("x.y"));         // juxtaposition
    CHECK(parse("xy") == Behavior::sym("xy"));   // single identifier, not a product
    CHECK(parse("(x + y).z") ==
          Behavior::seq(Behavior::alt(Behavior::sym("x"), Behavior::sym("y")),
                        Behavior::sym("z")));
    CHECK(parse("x**") == Behavior::star(Behavior::star(Behavior::sym("x"))));
    CHECK(parse("  F ( x . y ) *  ") == parse("F(x.y)*"));
}

TEST_CASE("parse chains associate to the right") {
    CHECK(parse("a + b + c") == parse("a + (b + c)"));
    CHECK(parse("a.b.c") == parse("a.(b.c)"));
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse("x.("), ParseError);
    try {
        parse("x.(");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("   "), ParseError);
    CHECK_THROWS_AS(parse("(x + y"), ParseError);
    CHECK_THROWS_AS(parse("x)"), ParseError);
    CHECK_THROWS_AS(parse("F x"), ParseError);
    CHECK_THROWS_AS(parse("x + + y"), ParseError);
}

TEST_CASE("symbol names are validated") {
    CHECK_THROWS_AS(Symbol(""), std::invalid_argument);
    CHECK_THROWS_AS(Symbol("F"), std::invalid_argument);
    CHECK_THROWS_AS(Symbol("0"), std::invalid_argument);
    CHECK_THROWS_AS(Symbol("a b"), std::invalid_argument);
    CHECK(Symbol("send_ch1").name() == "send_ch1");
    CHECK(Symbol("Fx").name() == "Fx");  // only the bare keyword is reserved
}

TEST_CASE("render uses minimal parentheses") {
    CHECK(render(Behavior::empty()) == "0");
    CHECK(render(B("F(x.y)*")) == "F(x.y)*");
    CHECK(render(Behavior::alt(Behavior::sym("x"),
                               Behavior::seq(Behavior::sym("y"), Behavior::sym("z")))) ==
          "x + y.z");
    // left-nested chains need parentheses to round-trip
    CHECK(render(Behavior::alt(Behavior::alt(B("x"), B("y")), B("z"))) == "(x + y) + z");
    CHECK(render(Behavior::seq(Behavior::seq(B("x"), B("y")), B("z"))) == "(x.y).z");
    CHECK(render(Behavior::seq(B("x"), Behavior::alt(B("y"), B("z")))) == "x.(y + z)");
    CHECK(render(Behavior::star(Behavior::star(B("x")))) == "x**");
    CHECK(render(Behavior::star(Behavior::seq(B("x"), B("y")))) == "(x.y)*");
}

TEST_CASE("parse/render round trip on random expressions") {
    ExprGen gen(7, {defaultAlphabet(3), 25, GenMode::Any});
    for (int i = 0; i < 500; ++i) {
        Behavior r = gen.next();
        CHECK(parse(render(r)) == r);
    }
}

TEST_CASE("size follows the recursive definition") {
    CHECK(Behavior::empty().size() == 0);
    CHECK(B("x").size() == 1);
    CHECK(B("x.y*").size() == 4);
    CHECK(B("F(x.y + y.x)*").size() == 9);
    // 0 is the unique minimum
    ExprGen gen(11, {defaultAlphabet(2), 10, GenMode::Any});
    for (int i = 0; i < 200; ++i) {
        Behavior r = gen.next();
        if (!(r == Behavior::empty())) CHECK(r.size() >= 1);
    }
}

TEST_CASE("compare is a total order refining size") {
    CHECK(compare(B("x"), B("x")) == std::strong_ordering::equal);
    CHECK(compare(Behavior::empty(), B("x")) == std::strong_ordering::less);
    CHECK(compare(B("F(x)"), B("F(y)")) == std::strong_ordering::less);
    CHECK(compare(B("F(y)"), B("F(x)")) == std::strong_ordering::greater);

    ExprGen gen(13, {defaultAlphabet(2), 8, GenMode::Any});
    std::vector<Behavior> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(gen.next());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            auto ij = compare(pool[i], pool[j]);
            auto ji = compare(pool[j], pool[i]);
            // antisymmetry, and EQ exactly on structural equality
            CHECK((ij < 0) == (ji > 0));
            CHECK((ij == 0) == (ji == 0));
            CHECK((ij == 0) == (pool[i] == pool[j]));
        }
    }
    // transitivity on sorted triples
    for (std::size_t i = 0; i + 2 < pool.size(); i += 3) {
        Behavior a = pool[i], b = pool[i + 1], c = pool[i + 2];
        if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
    }
}

TEST_CASE("alphabet collects sorted distinct symbols") {
    CHECK(alphabet(Behavior::empty()).empty());
    Alphabet ab = alphabet(B("F(x.y)"));
    REQUIRE(ab.size() == 2);
    CHECK(ab.symbols()[0].name() == "x");
    CHECK(ab.symbols()[1].name() == "y");
    CHECK(alphabet(B("x + x*")).size() == 1);
}
