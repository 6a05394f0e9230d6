// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tubecc/basis.hpp"
#include "tubecc/character.hpp"
#include "tubecc/expr.hpp"
#include "tubecc/multiplication.hpp"
#include "tubecc/tube.hpp"

using namespace tubecc;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t instances = 0;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        ++instances;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

TubeModule random_module(std::mt19937_64& rng, int rank, int max_summands, int max_length) {
    std::vector<Indec> parts;
    const int k = std::uniform_int_distribution<int>(1, max_summands)(rng);
    for (int t = 0; t < k; ++t) {
        parts.push_back(Indec{std::uniform_int_distribution<int>(1, rank)(rng),
                              std::uniform_int_distribution<int>(1, max_length)(rng)});
    }
    return TubeModule(rank, std::move(parts));
}

LaurentPoly x_ratio(int rank, const Integer& c, int up, int down) {
    ExponentVector e(static_cast<std::size_t>(rank), 0);
    ++e[static_cast<std::size_t>(up - 1)];
    --e[static_cast<std::size_t>(down - 1)];
    return LaurentPoly::monomial(rank, c, e);
}

Outcome closed_form_matches_definition() {
    Outcome o;
    for (int r = 1; r <= 5; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int n = 1; n <= 2 * r + 1; ++n) {
                const TubeModule m = TubeModule::indec(r, i, n);
                o.expect(char_indec_closed(r, Indec{i, n}) == char_definitional(m), "r=" + std::to_string(r) + " " + m.to_string());
            }
        }
    }
    return o;
}

Outcome multiplicativity() {
    Outcome o;
    std::mt19937_64 rng(20240501);
    for (int s = 0; s < 500; ++s) {
        const int r = std::uniform_int_distribution<int>(1, 5)(rng);
        const TubeModule m = random_module(rng, r, 3, 2 * r + 1);
        const TubeModule n = random_module(rng, r, 3, 2 * r + 1);
        o.expect(char_definitional(m) * char_definitional(n) == char_definitional(m.direct_sum(n)),
                 m.to_string() + " * " + n.to_string());
    }
    return o;
}

Outcome almost_split() {
    Outcome o;
    for (int r = 1; r <= 5; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int n = 1; n <= 2 * r; ++n) {
                const TubeModule m = TubeModule::indec(r, i, n);
                const TubeModule b = TubeModule::indec(r, i - 1, n + 1).direct_sum(TubeModule::indec_or_zero(r, i, n - 1));
                const bool identity = char_definitional(m) * char_definitional(tau(m)) == char_definitional(b) + one(r);
                o.expect(identity && ar_product(m).verified, m.to_string());
            }
        }
    }
    return o;
}

Outcome cluster_multiplication() {
    Outcome o;
    for (int r = 1; r <= 4; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= 2 * r; ++j) {
                for (int k = 1; k <= r; ++k) {
                    for (int l = 1; l <= 2 * r; ++l) {
                        const TubeModule m = TubeModule::indec(r, i, j);
                        const TubeModule n = TubeModule::indec(r, k, l);
                        if (ext1_dim(m, n) != 1 || hom_dim(n, tau(m)) != 1) continue;
                        bool ok = false;
                        try {
                            const ProductExpansion e = cluster_mult(m, n);
                            LaurentPoly rhs(r);
                            for (const ExpansionTerm& t : e.terms) rhs.add_scaled(t.coeff, char_definitional(t.module));
                            ok = e.verified && e.terms.size() == 2 &&
                                 char_definitional(m) * char_definitional(n) == rhs;
                        } catch (const std::exception&) {
                        }
                        o.expect(ok, m.to_string() + " * " + n.to_string());
                    }
                }
            }
        }
    }
    return o;
}

Outcome inductive_formula() {
    Outcome o;
    std::size_t seen[6] = {};
    for (int r = 2; r <= 5; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                for (int m = 0; m <= 2; ++m) {
                    for (int l = 0; l <= r - 1; ++l) {
                        for (int k = 1; k <= m * r + l; ++k) {
                            bool ok = false;
                            try {
                                const InductiveExpansion e = inductive_mult(r, i, k, j, m, l);
                                ++seen[static_cast<int>(e.which)];
                                const bool no_ext = ext1_cluster_dim(e.expansion.first, e.expansion.second) == 0;
                                ok = e.expansion.verified && no_ext == is_split_case(e.which);
                            } catch (const std::exception&) {
                            }
                            o.expect(ok, "r=" + std::to_string(r) + " i=" + std::to_string(i) + " k=" + std::to_string(k) +
                                             " j=" + std::to_string(j) + " m=" + std::to_string(m) + " l=" + std::to_string(l));
                        }
                    }
                }
            }
        }
    }
    for (std::size_t c : seen) o.expect(c > 0, "one of the six cases never occurred");
    return o;
}

Outcome worked_example() {
    Outcome o;
    const int r = 4;
    auto mod = [](const char* s) { return parse_module(s, 4); };
    const ModuleCombination expected{{mod("E(1,4)+E(2,1)"), 1}, {mod("E(1,2)+E(2,1)"), 1}, {mod("E(1,2)+E(4,1)"), 1},
                                     {mod("E(2,3)"), 1},        {mod("E(2,1)"), 1},        {mod("E(4,1)"), 2}};
    o.expect(expand_simple_product(r, {1, 2, 3, 4, 2}) == expected, "six-term expansion");
    const LaurentPoly lhs = char_definitional(mod("E(1,4)+E(2,1)"));
    const LaurentPoly rhs = char_definitional(mod("E(2,5)")) + char_definitional(mod("E(2,2)+E(2,1)")) -
                            char_definitional(mod("E(4,1)"));
    o.expect(lhs == rhs, "X_{E1[4]+E2} = X_{E2[5]} + X_{E2[2]+E2} - X_{E4}");
    return o;
}

Outcome rank_reduction() {
    Outcome o;
    for (int r = 2; r <= 6; ++r) {
        for (int i = 1; i <= r; ++i) {
            const LaurentPoly rhs =
                char_definitional(TubeModule::indec_or_zero(r, i + 1, r - 2)) + LaurentPoly::constant(r, 2);
            o.expect(char_definitional(TubeModule::indec(r, i, r)) == rhs && lemma_rank_reduction(r, i).verified,
                     "r=" + std::to_string(r) + " i=" + std::to_string(i));
        }
    }
    return o;
}

Outcome small_rank_values() {
    Outcome o;
    for (int n = 1; n <= 20; ++n) {
        o.expect(char_module(TubeModule::indec(1, 1, n)) == LaurentPoly::constant(1, n + 1), "r=1 n=" + std::to_string(n));
    }
    for (int n = 1; n <= 10; ++n) {
        o.expect(char_module(TubeModule::indec(2, 1, 2 * n - 1)) == x_ratio(2, 2 * n, 2, 1), "r=2 odd n=" + std::to_string(n));
        o.expect(char_module(TubeModule::indec(2, 1, 2 * n)) == LaurentPoly::constant(2, 2 * n + 1),
                 "r=2 even n=" + std::to_string(n));
    }
    return o;
}

Outcome basis_decomposition() {
    Outcome o;
    std::mt19937_64 rng(77);
    for (int s = 0; s < 200; ++s) {
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        const int factors = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<TubeModule> product;
        for (int f = 0; f < factors; ++f) product.push_back(random_module(rng, r, 1, 2 * r + 1));
        TubeModule sum(r);
        for (const TubeModule& f : product) sum = sum.direct_sum(f);
        bool ok = false;
        try {
            const DecompositionReport rep = decompose_report(sum);
            LaurentPoly target = one(r);
            for (const TubeModule& f : product) target *= char_definitional(f);
            LaurentPoly residual = target;
            bool rigid = true;
            for (const auto& [key, c] : rep.result.coeffs) {
                residual.add_scaled(-c, char_definitional(key));
                rigid = rigid && is_rigid(key);
            }
            ok = rigid && residual.is_zero() && rep.rewriting && *rep.rewriting == rep.elimination;
        } catch (const std::exception&) {
        }
        o.expect(ok, "product " + sum.to_string());
    }
    const Decomposition d = decompose(parse_module("E(2,5)", 4));
    o.expect(d.coeffs == ModuleCombination{{parse_module("E(2,1)", 4), 2}, {parse_module("E(4,1)", 4), 1}}, "X_{E2[5]}");
    return o;
}

Outcome linear_independence() {
    Outcome o;
    for (int r = 1; r <= 4; ++r) {
        std::vector<int> b(static_cast<std::size_t>(r), 0);
        for (;;) {
            const std::vector<TubeModule> family = enumerate_rigid(r, DimVector(r, b));
            o.expect(independence_check(family).independent, "r=" + std::to_string(r) + " bound=" + DimVector(r, b).to_string());
            std::size_t p = 0;
            while (p < b.size() && b[p] == 2) b[p++] = 0;
            if (p == b.size()) break;
            ++b[p];
        }
    }
    const IndependenceResult dep = independence_check({parse_module("E(1,1)+E(2,1)", 2), TubeModule(2)});
    o.expect(!dep.independent && dep.relation == std::vector<Integer>{1, -4}, "X_{E1}X_{E2} = 4 at r=2");
    return o;
}

Outcome oracle_coherence() {
    Outcome o;
    std::mt19937_64 rng(1009);
    for (int s = 0; s < 1000; ++s) {
        const int r = std::uniform_int_distribution<int>(1, 5)(rng);
        const TubeModule m = random_module(rng, r, 2, 2 * r);
        const TubeModule n = random_module(rng, r, 2, 2 * r);
        o.expect(ext1_dim(m, n) == hom_dim_direct(n, tau(m)), "Ext(" + m.to_string() + ", " + n.to_string() + ")");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 closed form equals definition", closed_form_matches_definition},
        {"2 multiplicativity", multiplicativity},
        {"3 almost split identity", almost_split},
        {"4 cluster multiplication", cluster_multiplication},
        {"5 inductive formula, six cases", inductive_formula},
        {"6 worked r=4 example", worked_example},
        {"7 rank reduction identity", rank_reduction},
        {"8 small rank closed values", small_rank_values},
        {"9 basis decomposition", basis_decomposition},
        {"10 linear independence", linear_independence},
        {"11 Ext/Hom oracle coherence", oracle_coherence},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s: %zu instances, %.3f s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.instances, secs,
                    o.ok ? "" : " -- first failure: ", o.detail.c_str());
        if (!o.ok) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
