#include <doctest.h>

#include <random>

#include "tubecc/error.hpp"
#include "tubecc/laurent.hpp"

using namespace tubecc;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int rank) {
    LaurentPoly p(rank);
    const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int t = 0; t < terms; ++t) {
        ExponentVector e(static_cast<std::size_t>(rank));
        for (auto& x : e) x = std::uniform_int_distribution<int>(-3, 3)(rng);
        p += LaurentPoly::monomial(rank, std::uniform_int_distribution<int>(-9, 9)(rng), e);
    }
    return p;
}

}  // namespace

TEST_CASE("zero and constants") {
    CHECK(LaurentPoly(3).is_zero());
    CHECK(LaurentPoly(3).to_string() == "0");
    CHECK(LaurentPoly::constant(2, 0).is_zero());
    CHECK(LaurentPoly::constant(1, 6).to_string() == "6");
    CHECK(one(4).eval_all_ones() == 1);
    CHECK_THROWS_AS(LaurentPoly(0), Error);
}

TEST_CASE("variables reduce cyclically") {
    CHECK(LaurentPoly::variable(4, 5) == LaurentPoly::variable(4, 1));
    CHECK(LaurentPoly::variable(4, 0) == LaurentPoly::variable(4, 4));
    CHECK(LaurentPoly::variable(3, 2).to_string() == "x2");
}

TEST_CASE("rendering") {
    const LaurentPoly p = LaurentPoly::monomial(3, 2, {-1, 0, 1}) + LaurentPoly::variable(3, 2) - one(3);
    CHECK(p.to_string() == "x2 - 1 + 2*x1^-1*x3");
    CHECK(p.coefficient({-1, 0, 1}) == 2);
    CHECK(p.coefficient({5, 5, 5}) == 0);
    CHECK(p.eval_all_ones() == 2);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(3);
    for (int s = 0; s < 200; ++s) {
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        const LaurentPoly a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * one(r) == a);
        CHECK((a * b).eval_all_ones() == a.eval_all_ones() * b.eval_all_ones());
        CHECK(LaurentPoly::from_json(a.to_json()) == a);
        CHECK(a.shift_variables(r) == a);
        CHECK((a * b).shift_variables(1) == a.shift_variables(1) * b.shift_variables(1));
    }
}

TEST_CASE("rank mismatch is rejected") {
    CHECK_THROWS_AS(LaurentPoly(2) + LaurentPoly(3), Error);
    CHECK_THROWS_AS(LaurentPoly::monomial(2, 1, {1, 2, 3}), Error);
}

TEST_CASE("json") {
    const LaurentPoly p = LaurentPoly::monomial(2, 3, {1, -1});
    CHECK(p.to_json() == R"j({"rank":2,"terms":[{"coeff":3,"exp":[1,-1]}]})j");
    const LaurentPoly big = LaurentPoly::constant(1, Integer("123456789012345678901234567890"));
    CHECK(big.to_json() == R"j({"rank":1,"terms":[{"coeff":"123456789012345678901234567890","exp":[0]}]})j");
    CHECK(LaurentPoly::from_json(big.to_json()) == big);
    CHECK_THROWS_AS(LaurentPoly::from_json("{"), ParseError);
    CHECK_THROWS_AS(LaurentPoly::from_json(R"j({"rank":2,"terms":[{"coeff":1,"exp":[1]}]})j"), Error);
}

TEST_CASE("exponent overflow is detected") {
    const LaurentPoly p = LaurentPoly::monomial(1, 1, {2000000000});
    CHECK_THROWS_AS(p * p, std::overflow_error);
}
