#include "tubecc/multiplication.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tubecc/character.hpp"
#include "tubecc/cyclic.hpp"
#include "tubecc/error.hpp"

namespace tubecc {

namespace {

TubeModule sum_of(int rank, std::initializer_list<std::pair<std::int64_t, std::int64_t>> factors) {
    TubeModule out(rank);
    for (const auto& [socle, length] : factors) {
        if (length < 0) {
            fail(ErrorKind::verification, "formula produced negative length " + std::to_string(length) +
                                              " for E_" + std::to_string(socle));
        }
        out = out.direct_sum(TubeModule::indec_or_zero(rank, socle, static_cast<int>(length)));
    }
    return out;
}

const Indec& only_summand(const TubeModule& m, const char* what) {
    if (!m.is_indecomposable()) {
        fail(ErrorKind::validation, std::string(what) + " must be indecomposable, got " + m.to_string());
    }
    return m.summands().front();
}

}  // namespace

std::vector<ExpansionTerm> canonical_terms(const std::vector<ExpansionTerm>& terms) {
    std::map<TubeModule, Integer> merged;
    for (const ExpansionTerm& t : terms) {
        auto [it, inserted] = merged.try_emplace(t.module, t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    std::vector<ExpansionTerm> out;
    for (auto& [module, coeff] : merged) {
        if (coeff != 0) out.push_back(ExpansionTerm{coeff, module});
    }
    return out;
}

ProductExpansion verify_expansion(ProductExpansion expansion) {
    const int r = expansion.first.rank();
    const LaurentPoly lhs = char_module(expansion.first) * char_module(expansion.second);
    LaurentPoly rhs(r);
    for (const ExpansionTerm& t : expansion.terms) rhs.add_scaled(t.coeff, char_module(t.module));
    if (!(lhs == rhs)) {
        expansion.verified = false;
        fail(ErrorKind::verification, "expansion failed: " + to_string(expansion) + "; lhs = " + lhs.to_string() +
                                          ", rhs = " + rhs.to_string());
    }
    expansion.verified = true;
    return expansion;
}

ProductExpansion ar_product(const TubeModule& m) {
    if (m.is_zero()) fail(ErrorKind::validation, "almost split sequences end at a nonzero indecomposable");
    const Indec& e = only_summand(m, "almost split product argument");
    const int r = m.rank();
    ProductExpansion out{m, tau(m), {}, false};
    out.terms.push_back({1, sum_of(r, {{e.socle - 1, e.length + 1}, {e.socle, e.length - 1}})});
    out.terms.push_back({1, TubeModule(r)});
    return verify_expansion(std::move(out));
}

ProductExpansion cluster_mult(const TubeModule& m, const TubeModule& n) {
    const Indec& em = only_summand(m, "first argument");
    const Indec& en = only_summand(n, "second argument");
    const int r = m.rank();
    const std::size_t ext = ext1_dim(m, n);
    const std::size_t hom = hom_dim(n, tau(m));
    if (ext != 1 || hom != 1) {
        fail(ErrorKind::precondition, "cluster multiplication needs dim Ext^1(M,N) = dim Hom(N, tau M) = 1; got " +
                                          std::to_string(ext) + " and " + std::to_string(hom) + " for M = " +
                                          m.to_string() + ", N = " + n.to_string());
    }

    const std::int64_t i = em.socle, j = em.length, k = en.socle, l = en.length;
    // g: E_k[l] -> E_{i-1}[j] maps the top a factors of N onto the bottom of tau M.
    std::int64_t a = 0;
    for (std::int64_t cand = std::min(l, j); cand >= 1; --cand) {
        if (cyclic_index(i - 1 + cand, r) == cyclic_index(k + l, r)) {
            a = cand;
            break;
        }
    }
    if (a == 0) fail(ErrorKind::verification, "no image length for g although Hom(N, tau M) != 0");

    // Independent bookkeeping: image, kernel and cokernel sizes of the actual map g.
    const HomSpace hs = hom_space(n, tau(m));
    std::size_t image = 0;
    for (const SmallMatrix& gv : hs.basis.front()) image += exact_rank(gv);
    if (static_cast<std::int64_t>(image) != a) {
        fail(ErrorKind::verification, "image of g has dimension " + std::to_string(image) +
                                          ", combinatorial value " + std::to_string(a));
    }

    // Lift M's socle to k + l - a + 1 on the universal cover: E is union plus intersection of the intervals.
    const std::int64_t lifted = k + l - a + 1;
    ProductExpansion out{m, n, {}, false};
    out.terms.push_back({1, sum_of(r, {{k, lifted + j - k}, {lifted, k + l - lifted}})});
    out.terms.push_back({1, sum_of(r, {{k, l - a}, {i + a, j - a}})});
    return verify_expansion(std::move(out));
}

ProductExpansion dm1_step(int rank, Dm1Kind kind, int i, int n) {
    if (n < 1) fail(ErrorKind::validation, "dm1_step needs n >= 1");
    ProductExpansion out{TubeModule(rank), TubeModule(rank), {}, false};
    if (kind == Dm1Kind::extend_top) {
        out.first = TubeModule::indec(rank, i + n, 1);
        out.second = TubeModule::indec(rank, i, n);
        out.terms.push_back({1, sum_of(rank, {{i, n + 1}})});
        out.terms.push_back({1, sum_of(rank, {{i, n - 1}})});
    } else {
        out.first = TubeModule::indec(rank, i, 1);
        out.second = TubeModule::indec(rank, i + 1, n);
        out.terms.push_back({1, sum_of(rank, {{i, n + 1}})});
        out.terms.push_back({1, sum_of(rank, {{i + 2, n - 1}})});
    }
    return verify_expansion(std::move(out));
}

const char* to_string(InductiveCase c) noexcept {
    switch (c) {
        case InductiveCase::case_1_1: return "1.1";
        case InductiveCase::case_1_2: return "1.2";
        case InductiveCase::case_1_3: return "1.3";
        case InductiveCase::case_2_1: return "2.1";
        case InductiveCase::case_2_2: return "2.2";
        case InductiveCase::case_2_3: return "2.3";
    }
    return "?";
}

InductiveExpansion inductive_mult(int rank, int i, int k, int j, int m, int l) {
    const std::int64_t r = rank;
    if (rank < 1 || i < 1 || i > rank || j < 1 || j > rank || m < 0 || l < 0 || l > rank - 1 || k < 1 ||
        k > m * r + l) {
        fail(ErrorKind::validation, "inductive_mult parameters out of range: r=" + std::to_string(rank) +
                                        " i=" + std::to_string(i) + " k=" + std::to_string(k) +
                                        " j=" + std::to_string(j) + " m=" + std::to_string(m) +
                                        " l=" + std::to_string(l));
    }
    const std::int64_t mr = m * r;
    InductiveExpansion out{InductiveCase::case_1_3,
                           ProductExpansion{TubeModule::indec(rank, i, k),
                                            TubeModule::indec(rank, j, static_cast<int>(mr + l)), {}, false}};
    auto& terms = out.expansion.terms;
    if (j <= i) {
        if (k + i >= r + j) {
            out.which = InductiveCase::case_1_1;
            terms.push_back({1, sum_of(rank, {{i, mr + r + l + j - i}, {j, k + i - r - j}})});
            terms.push_back({1, sum_of(rank, {{i, r + j - i - 1}, {k + i + 1, mr + r + l + j - k - i - 1}})});
        } else if (i <= l + j && l + j <= k + i - 1) {
            out.which = InductiveCase::case_1_2;
            terms.push_back({1, sum_of(rank, {{j, mr + k + i - j}, {i, l + j - i}})});
            terms.push_back({1, sum_of(rank, {{j, mr + i - j - 1}, {l + j + 1, k + i - l - j - 1}})});
        } else {
            out.which = InductiveCase::case_1_3;
        }
    } else {
        if (k >= j - i) {
            out.which = InductiveCase::case_2_1;
            terms.push_back({1, sum_of(rank, {{i, j - i - 1}, {k + i + 1, mr + l + j - k - i - 1}})});
            terms.push_back({1, sum_of(rank, {{i, mr + l + j - i}, {j, k + i - j}})});
        } else if (i <= l + j - r && l + j - r <= k + i - 1) {
            out.which = InductiveCase::case_2_2;
            terms.push_back({1, sum_of(rank, {{j, mr + r + k + i - j}, {i, l + j - r - i}})});
            terms.push_back({1, sum_of(rank, {{j, mr + r + i - j - 1}, {l + j + 1, k + r + i - l - j - 1}})});
        } else {
            out.which = InductiveCase::case_2_3;
        }
    }
    if (is_split_case(out.which)) {
        terms.push_back({1, out.expansion.first.direct_sum(out.expansion.second)});
    }
    out.expansion = verify_expansion(std::move(out.expansion));
    return out;
}

InductiveExpansion multiply_indecomposables(int rank, const Indec& a, const Indec& b) {
    const Indec& shorter = a.length <= b.length ? a : b;
    const Indec& longer = a.length <= b.length ? b : a;
    return inductive_mult(rank, cyclic_index(shorter.socle, rank), shorter.length, cyclic_index(longer.socle, rank),
                          longer.length / rank, longer.length % rank);
}

std::string to_string(const ProductExpansion& e) {
    std::ostringstream os;
    os << "X[" << e.first.to_string() << "] * X[" << e.second.to_string() << "] = ";
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
        if (t) os << " + ";
        if (e.terms[t].coeff != 1) os << e.terms[t].coeff.get_str() << '*';
        os << "X[" << e.terms[t].module.to_string() << ']';
    }
    if (e.terms.empty()) os << '0';
    return os.str();
}

}  // namespace tubecc
