#include <doctest.h>

#include <random>

#include "tubecc/error.hpp"
#include "tubecc/expr.hpp"

using namespace tubecc;

TEST_CASE("grammar") {
    CHECK(parse_module("0", 3).is_zero());
    CHECK(parse_module(" E( 2 , 5 ) ", 4) == TubeModule::indec(4, 2, 5));
    CHECK(parse_module("E(1,2)+E(5,1)", 4) == TubeModule(4, {Indec{1, 2}, Indec{1, 1}}));
    CHECK(parse_module("E(-1,1)", 4) == TubeModule::indec(4, 3, 1));
    CHECK(parse_module("0+E(1,1)", 2) == TubeModule::indec(2, 1, 1));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_module("E(1,2)+F", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_module("E(1,0)", 3), ParseError);
    CHECK_THROWS_AS(parse_module("E(1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_module("", 3), ParseError);
    CHECK_THROWS_AS(parse_module("E(1,2)+", 3), ParseError);
    CHECK_THROWS_AS(parse_module("E(1,99999999999999999999)", 3), ParseError);
}

TEST_CASE("printing round trips") {
    std::mt19937_64 rng(2);
    for (int s = 0; s < 200; ++s) {
        const int r = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<Indec> parts;
        const int k = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int t = 0; t < k; ++t) {
            parts.push_back(Indec{std::uniform_int_distribution<int>(-10, 10)(rng), std::uniform_int_distribution<int>(1, 12)(rng)});
        }
        const TubeModule m(r, parts);
        CHECK(parse_module(m.to_string(), r) == m);
    }
}
