#pragma once

#include <string>
#include <vector>

#include "tubecc/laurent.hpp"
#include "tubecc/tube.hpp"

namespace tubecc {

struct ExpansionTerm {
    Integer coeff;
    TubeModule module;

    friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// X_first * X_second = sum coeff * X_module, checked by exact expansion.
struct ProductExpansion {
    TubeModule first;
    TubeModule second;
    std::vector<ExpansionTerm> terms;
    bool verified = false;
};

/// Expands both sides with the closed-form characters; sets `verified` or
/// throws an ErrorKind::verification error describing the mismatch.
ProductExpansion verify_expansion(ProductExpansion expansion);

/// Terms sorted by module with equal modules merged and zero coefficients dropped.
std::vector<ExpansionTerm> canonical_terms(const std::vector<ExpansionTerm>& terms);

/// Almost split sequence 0 -> tau M -> B -> M -> 0 ending at M = E_i[n]:
/// X_M X_{tau M} = X_B + 1 with B = E_{i-1}[n+1] + E_i[n-1].
ProductExpansion ar_product(const TubeModule& m);

/// For M = E_i[j], N = E_k[l] with dim Ext^1(M, N) = dim Hom(N, tau M) = 1:
/// X_M X_N = X_E + X_{E'} where E is the middle term of the nonsplit
/// extension of M by N and E' = ker g + tau^{-1} coker g for g: N -> tau M.
ProductExpansion cluster_mult(const TubeModule& m, const TubeModule& n);

enum class Dm1Kind { extend_top, extend_socle };

/// extend_top:    X_{E_{i+n}} X_{E_i[n]}   = X_{E_i[n+1]} + X_{E_i[n-1]}
/// extend_socle:  X_{E_i}     X_{E_{i+1}[n]} = X_{E_i[n+1]} + X_{E_{i+2}[n-1]}
ProductExpansion dm1_step(int rank, Dm1Kind kind, int i, int n);

enum class InductiveCase { case_1_1, case_1_2, case_1_3, case_2_1, case_2_2, case_2_3 };

const char* to_string(InductiveCase c) noexcept;

inline bool is_split_case(InductiveCase c) noexcept {
    return c == InductiveCase::case_1_3 || c == InductiveCase::case_2_3;
}

struct InductiveExpansion {
    InductiveCase which;
    ProductExpansion expansion;
};

/// X_{E_i[k]} X_{E_j[mr+l]} for 1 <= k <= mr+l, 0 <= l <= r-1, 1 <= i, j <= r.
InductiveExpansion inductive_mult(int rank, int i, int k, int j, int m, int l);

/// inductive_mult after normalising the arguments: the shorter module goes
/// first and the longer length is written as m*r + l with 0 <= l < r.
InductiveExpansion multiply_indecomposables(int rank, const Indec& a, const Indec& b);

std::string to_string(const ProductExpansion& e);

}  // namespace tubecc
