#include <catch2/catch_amalgamated.hpp>

#include "synchro/permutation.hpp"

using namespace synchro;

TEST_CASE("cycle notation parses to image lists") {
    CHECK(Permutation::parse("(0 1 2 3)", 4).images() == std::vector<int>{1, 2, 3, 0});
    CHECK(Permutation::parse("[0,1,2]", 3).is_identity());
    CHECK(Permutation::parse("(0 1)(2 3)", 5).images() == std::vector<int>{1, 0, 3, 2, 4});
    CHECK(Permutation::parse("()", 3).is_identity());
    CHECK(Permutation::parse("(1 4)", 5).images() == std::vector<int>{0, 4, 2, 3, 1});
}

TEST_CASE("malformed permutations are rejected") {
    CHECK_THROWS_AS(Permutation::parse("[0,0,1]", 3), Error);         // not a bijection
    CHECK_THROWS_AS(Permutation::parse("(0 5)", 3), ParseError);      // out of range
    CHECK_THROWS_AS(Permutation::parse("(0 1", 3), ParseError);       // unclosed
    CHECK_THROWS_AS(Permutation::parse("0 1 2", 3), ParseError);      // no brackets
    CHECK_THROWS_AS(Permutation::parse("[0,1]", 3), Error);           // wrong length
    CHECK_THROWS_AS(Permutation::parse("(0 1)(1 2)", 3), ParseError); // repeated point
}

TEST_CASE("composition is the right action") {
    Permutation p = Permutation::parse("(0 1 2)", 3);
    Permutation q = Permutation::parse("(0 1)", 3);
    CHECK(compose(p, Permutation::identity(3)) == p);
    CHECK(compose(q, q).is_identity());
    CHECK(compose(p, q).images() == std::vector<int>{0, 2, 1});
    CHECK_THROWS_AS(compose(p, Permutation::identity(4)), Error);
}

TEST_CASE("composition is associative and inverses cancel") {
    std::vector<Permutation> sample = {
        Permutation::parse("(0 1 2 3 4)", 5), Permutation::parse("(0 1)", 5),
        Permutation::parse("(1 3)(2 4)", 5), Permutation::parse("[4,3,2,1,0]", 5),
        Permutation::identity(5)};
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    for (const auto& a : sample) {
        CHECK(compose(a, a.inverse()).is_identity());
        CHECK(compose(a.inverse(), a).is_identity());
    }
}

TEST_CASE("cycle strings round-trip") {
    for (const char* text : {"(0 1 2 3)", "(0 2)(1 3)", "()", "(1 4)(2 3)"}) {
        Permutation p = Permutation::parse(text, 5);
        CHECK(Permutation::parse(p.cycle_string(), 5) == p);
    }
}
