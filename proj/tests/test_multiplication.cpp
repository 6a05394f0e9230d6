#include <doctest.h>

#include "tubecc/character.hpp"
#include "tubecc/error.hpp"
#include "tubecc/expr.hpp"
#include "tubecc/multiplication.hpp"

using namespace tubecc;

namespace {

TubeModule M(const char* s, int r) { return parse_module(s, r); }

}  // namespace

TEST_CASE("almost split products") {
    const ProductExpansion e = ar_product(M("E(2,3)", 4));
    CHECK(e.verified);
    CHECK(e.second == M("E(1,3)", 4));
    CHECK(e.terms.size() == 2);
    CHECK(e.terms[0].module == M("E(1,4)+E(2,2)", 4));
    CHECK(e.terms[1].module.is_zero());
    CHECK(ar_product(M("E(1,1)", 1)).verified);
    CHECK_THROWS_AS(ar_product(TubeModule(3)), Error);
    CHECK_THROWS_AS(ar_product(M("E(1,1)+E(2,1)", 3)), Error);
}

TEST_CASE("cluster multiplication") {
    // simple on top of a longer module
    const ProductExpansion a = cluster_mult(M("E(3,1)", 4), M("E(1,2)", 4));
    CHECK(a.verified);
    CHECK(canonical_terms(a.terms) == canonical_terms({{1, M("E(1,3)", 4)}, {1, M("E(1,1)", 4)}}));
    // extension at the socle side
    const ProductExpansion b = cluster_mult(M("E(2,2)", 4), M("E(1,1)", 4));
    CHECK(b.verified);
    CHECK(canonical_terms(b.terms) == canonical_terms({{1, M("E(1,3)", 4)}, {1, M("E(3,1)", 4)}}));
    CHECK(cluster_mult(M("E(3,4)", 3), M("E(2,1)", 3)).verified);
    CHECK_THROWS_AS(cluster_mult(M("E(1,1)", 4), M("E(3,1)", 4)), Error);
    try {
        cluster_mult(M("E(1,1)", 4), M("E(3,1)", 4));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
}

TEST_CASE("dm1 steps") {
    for (int r = 1; r <= 5; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int n = 1; n <= 2 * r; ++n) {
                CHECK(dm1_step(r, Dm1Kind::extend_top, i, n).verified);
                CHECK(dm1_step(r, Dm1Kind::extend_socle, i, n).verified);
            }
        }
    }
    CHECK_THROWS_AS(dm1_step(3, Dm1Kind::extend_top, 1, 0), Error);
}

TEST_CASE("inductive formula cases") {
    CHECK(inductive_mult(4, 3, 2, 1, 1, 0).which == InductiveCase::case_1_1);
    CHECK(inductive_mult(4, 2, 1, 1, 0, 1).which == InductiveCase::case_1_2);
    CHECK(inductive_mult(4, 1, 1, 1, 0, 1).which == InductiveCase::case_1_3);
    CHECK(inductive_mult(4, 1, 1, 2, 0, 1).which == InductiveCase::case_2_1);
    CHECK(inductive_mult(4, 1, 2, 4, 0, 2).which == InductiveCase::case_2_2);
    CHECK(inductive_mult(4, 1, 1, 3, 0, 1).which == InductiveCase::case_2_3);
    CHECK(is_split_case(InductiveCase::case_2_3));
    CHECK_FALSE(is_split_case(InductiveCase::case_2_2));
    CHECK_THROWS_AS(inductive_mult(4, 1, 5, 1, 1, 0), Error);
    CHECK_THROWS_AS(inductive_mult(4, 1, 1, 1, 0, 4), Error);
    CHECK_THROWS_AS(inductive_mult(4, 0, 1, 1, 0, 1), Error);
}

TEST_CASE("inductive formula sweep") {
    for (int r = 2; r <= 4; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                for (int m = 0; m <= 2; ++m) {
                    for (int l = 0; l < r; ++l) {
                        for (int k = 1; k <= m * r + l; ++k) {
                            const InductiveExpansion e = inductive_mult(r, i, k, j, m, l);
                            CHECK(e.expansion.verified);
                            CHECK(is_split_case(e.which) == (ext1_cluster_dim(e.expansion.first, e.expansion.second) == 0));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("normalised products put the shorter module first") {
    const InductiveExpansion e = multiply_indecomposables(3, Indec{1, 7}, Indec{2, 2});
    CHECK(e.expansion.first == M("E(2,2)", 3));
    CHECK(e.expansion.second == M("E(1,7)", 3));
    CHECK(e.expansion.verified);
}

TEST_CASE("rendering") {
    const ProductExpansion e = ar_product(M("E(1,1)", 2));
    CHECK(to_string(e) == "X[E(1,1)] * X[E(2,1)] = X[E(2,2)] + X[0]");
}
