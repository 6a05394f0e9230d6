#include <doctest.h>

#include <random>

#include "tubecc/basis.hpp"
#include "tubecc/character.hpp"
#include "tubecc/error.hpp"
#include "tubecc/expr.hpp"

using namespace tubecc;

namespace {

TubeModule M(const char* s, int r) { return parse_module(s, r); }

}  // namespace

TEST_CASE("enumerate rigid modules") {
    CHECK(enumerate_rigid(1, DimVector(1, {5})) == std::vector<TubeModule>{TubeModule(1)});
    CHECK(enumerate_rigid(2, DimVector(2, {1, 1})) == std::vector<TubeModule>{TubeModule(2), M("E(1,1)", 2), M("E(2,1)", 2)});
    CHECK(enumerate_rigid(2, DimVector(2, {3, 0})) ==
          std::vector<TubeModule>{TubeModule(2), M("E(1,1)", 2), M("E(1,1)+E(1,1)", 2), M("E(1,1)+E(1,1)+E(1,1)", 2)});
    for (int r = 1; r <= 4; ++r) {
        const DimVector bound(r, std::vector<int>(static_cast<std::size_t>(r), 2));
        const std::vector<TubeModule> all = enumerate_rigid(r, bound);
        for (const TubeModule& m : all) {
            CHECK(is_rigid(m));
            CHECK(dim_le(dim_vector(m), bound));
            CHECK(std::binary_search(all.begin(), all.end(), tau(m)));
        }
    }
}

TEST_CASE("enumeration is complete") {
    // brute force over all modules with summand lengths < r inside the bound
    const int r = 3;
    const DimVector bound(r, {2, 1, 2});
    std::vector<Indec> shorts;
    for (int i = 1; i <= r; ++i) {
        for (int n = 1; n < r; ++n) shorts.push_back(Indec{i, n});
    }
    std::vector<TubeModule> brute;
    std::vector<int> mult(shorts.size(), 0);
    for (;;) {
        std::vector<Indec> parts;
        for (std::size_t k = 0; k < shorts.size(); ++k) {
            for (int t = 0; t < mult[k]; ++t) parts.push_back(shorts[k]);
        }
        const TubeModule m(r, parts);
        if (dim_le(dim_vector(m), bound) && is_rigid(m)) brute.push_back(m);
        std::size_t p = 0;
        while (p < mult.size() && mult[p] == 2) mult[p++] = 0;
        if (p == mult.size()) break;
        ++mult[p];
    }
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_rigid(r, bound) == brute);
}

TEST_CASE("products of simples") {
    CHECK(expand_simple_product(3, {1}) == ModuleCombination{{M("E(1,1)", 3), 1}});
    CHECK(expand_simple_product(2, {1, 2}) == ModuleCombination{{TubeModule(2), 1}, {M("E(1,2)", 2), 1}});
    const ModuleCombination six_terms{{M("E(1,4)+E(2,1)", 4), 1}, {M("E(1,2)+E(2,1)", 4), 1}, {M("E(1,2)+E(4,1)", 4), 1},
                                  {M("E(2,3)", 4), 1},        {M("E(2,1)", 4), 1},        {M("E(4,1)", 4), 2}};
    CHECK(expand_simple_product(4, {1, 2, 3, 4, 2}) == six_terms);
    const ModuleCombination ray{{M("E(2,5)", 4), 1},        {M("E(2,3)", 4), 1}, {M("E(2,2)+E(2,1)", 4), 1},
                                {M("E(1,2)+E(2,1)", 4), 1}, {M("E(2,1)", 4), 1}, {M("E(1,2)+E(4,1)", 4), 1},
                                {M("E(4,1)", 4), 1}};
    CHECK(expand_simple_product(4, {2, 3, 4, 1, 2}) == ray);
    CHECK(expand_simple_product(1, {1, 1, 1}) == ModuleCombination{{M("E(1,3)", 1), 1}, {M("E(1,1)", 1), 2}});
}

TEST_CASE("products of simples are triangular") {
    std::mt19937_64 rng(21);
    for (int s = 0; s < 100; ++s) {
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        const std::vector<TubeModule> family = enumerate_rigid(r, DimVector(r, std::vector<int>(static_cast<std::size_t>(r), 2)));
        const TubeModule t = family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
        std::vector<int> word;
        for (const Indec& e : t.summands()) {
            for (int q = 0; q < e.length; ++q) word.push_back(e.socle + q);
        }
        const ModuleCombination c = expand_simple_product(r, word);
        std::size_t top = 0;
        for (const auto& [key, coeff] : c) {
            const DimOrder o = dim_order_cmp(dim_vector(key), dim_vector(t));
            CHECK((o == DimOrder::equal || o == DimOrder::less));
            if (o == DimOrder::equal) {
                CHECK(key == t);
                CHECK(coeff == 1);
                ++top;
            }
        }
        CHECK(top == 1);
    }
}

TEST_CASE("decomposition examples") {
    CHECK(decompose(M("E(2,5)", 4)).coeffs == ModuleCombination{{M("E(2,1)", 4), 2}, {M("E(4,1)", 4), 1}});
    CHECK(decompose(M("E(1,4)+E(2,1)", 4)).coeffs == ModuleCombination{{M("E(2,2)+E(2,1)", 4), 1}, {M("E(2,1)", 4), 2}});
    CHECK(decompose(M("E(1,5)", 1)).coeffs == ModuleCombination{{TubeModule(1), 6}});
    CHECK(decompose_poly(LaurentPoly::constant(3, 7), DimVector(3)).coeffs == ModuleCombination{{TubeModule(3), 7}});
    CHECK(decompose_product({M("E(1,1)", 2), M("E(2,1)", 2)}).coeffs == ModuleCombination{{TubeModule(2), 4}});

    // X_{E1[4]+E2} - X_{E2[5]} - X_{E2[2]+E2} + X_{E4} = 0
    ModuleCombination sum;
    auto add = [&](const Decomposition& d, int sign) {
        for (const auto& [m, c] : d.coeffs) {
            sum[m] += sign * c;
            if (sum[m] == 0) sum.erase(m);
        }
    };
    add(decompose(M("E(1,4)+E(2,1)", 4)), 1);
    add(decompose(M("E(2,5)", 4)), -1);
    add(decompose(M("E(2,2)+E(2,1)", 4)), -1);
    add(decompose(M("E(4,1)", 4)), 1);
    CHECK(sum.empty());
}

TEST_CASE("rewriting and elimination agree") {
    std::mt19937_64 rng(31);
    for (int s = 0; s < 100; ++s) {
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<Indec> parts;
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int t = 0; t < k; ++t) {
            parts.push_back(Indec{std::uniform_int_distribution<int>(1, r)(rng), std::uniform_int_distribution<int>(1, 2 * r + 1)(rng)});
        }
        const TubeModule m(r, parts);
        const DecompositionReport rep = decompose_report(m);
        REQUIRE(rep.rewriting);
        CHECK(*rep.rewriting == rep.elimination);
        CHECK(evaluate(r, rep.result.coeffs) == char_definitional(m));
        for (const auto& [key, c] : rep.result.coeffs) {
            CHECK(is_rigid(key));
            CHECK(c != 0);
        }
    }
}

TEST_CASE("fuel exhaustion falls back to elimination") {
    DecomposeOptions opt;
    opt.fuel = 1;
    const DecompositionReport rep = decompose_report(M("E(1,9)+E(2,7)", 4), opt);
    CHECK_FALSE(rep.rewriting);
    CHECK(evaluate(4, rep.result.coeffs) == char_module(M("E(1,9)+E(2,7)", 4)));
    CHECK(rep.result.coeffs == decompose(M("E(1,9)+E(2,7)", 4)).coeffs);
}

TEST_CASE("targets outside the span fail loudly") {
    const LaurentPoly x1 = LaurentPoly::variable(3, 1);
    CHECK_THROWS_AS(decompose_poly(x1, DimVector(3, {2, 2, 2})), Error);
    try {
        decompose_poly(x1, DimVector(3, {2, 2, 2}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::decomposition);
    }
    // half of a basis character is not an integer combination
    const LaurentPoly half = char_module(M("E(1,1)", 2));
    CHECK(decompose_poly(half * Integer(3), DimVector(2, {1, 1})).coeffs == ModuleCombination{{M("E(1,1)", 2), 3}});
}

TEST_CASE("linear independence") {
    CHECK(independence_check({TubeModule(3), M("E(1,1)", 3)}).independent);
    const IndependenceResult dep = independence_check({M("E(1,1)+E(2,1)", 2), TubeModule(2)});
    CHECK_FALSE(dep.independent);
    CHECK(dep.relation == std::vector<Integer>{1, -4});
    std::vector<TubeModule> family;
    for (int i = 1; i <= 3; ++i) {
        for (int a = 0; a <= 1; ++a) {
            for (int b = 0; b <= 1; ++b) family.push_back(char_e_family(3, {a, b}, i));
        }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    CHECK(independence_check(family).independent);
    CHECK_FALSE(independence_check({M("E(1,2)", 2), TubeModule(2)}).independent);
}

TEST_CASE("rank reduction identity") {
    CHECK(lemma_rank_reduction(2, 1).verified);
    CHECK(lemma_rank_reduction(2, 1).rhs[0].module.is_zero());
    CHECK(lemma_rank_reduction(3, 1).rhs[0].module == M("E(2,1)", 3));
    CHECK(lemma_rank_reduction(4, 2).rhs[0].module == M("E(3,2)", 4));
    CHECK_THROWS_AS(lemma_rank_reduction(1, 1), Error);
}

TEST_CASE("decomposition json") {
    const Decomposition d = decompose(M("E(2,5)", 4));
    CHECK(to_json(d) == R"j({"rank":4,"terms":[{"coeff":2,"module":"E(2,1)"},{"coeff":1,"module":"E(4,1)"}]})j");
    CHECK(to_string(d) == "{E(2,1): 2, E(4,1): 1}");
    const Decomposition back = decomposition_from_json(to_json(d));
    CHECK(back.coeffs == d.coeffs);
    CHECK(back.target == d.target);
    CHECK_THROWS_AS(decomposition_from_json("[1,2]"), ParseError);
    CHECK_THROWS_AS(decomposition_from_json("{"), ParseError);
}
