#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubecc/laurent.hpp"
#include "tubecc/multiplication.hpp"
#include "tubecc/tube.hpp"

namespace tubecc {

/// Integer combination of modules, keyed canonically; no zero coefficients.
using ModuleCombination = std::map<TubeModule, Integer>;

/// target = sum coeff * X_R over rigid R.
struct Decomposition {
    int rank = 1;
    ModuleCombination coeffs;
    LaurentPoly target{1};
};

/// All rigid modules R with dim R <= bound componentwise, including 0, in
/// canonical order. Summands of a rigid module have length < rank.
std::vector<TubeModule> enumerate_rigid(int rank, const DimVector& bound);

/// Expands the product of simple characters X_{E_w1} X_{E_w2} ... into
/// module characters. The word is split into runs of cyclically consecutive
/// vertices; each run is treated as one ray.
ModuleCombination expand_simple_product(int rank, const std::vector<int>& word);

/// Same expansion with the rays given explicitly. Each ray a, a+1, ... grows
/// one chain E_a[n] through X_{E_{a+n}} X_{E_a[n]} = X_{E_a[n+1]} + X_{E_a[n-1]};
/// the leading term is the direct sum of the full rays and every other term
/// has its simple summands regrouped into increasing rays and expanded again.
ModuleCombination expand_ray_product(int rank, const std::vector<std::vector<int>>& rays);

struct DecomposeOptions {
    /// Rewrite steps allowed in the rewriting stage before it gives up.
    std::size_t fuel = 10000;
};

struct DecompositionReport {
    Decomposition result;
    /// Rewriting-stage output, absent when it ran out of fuel.
    std::optional<ModuleCombination> rewriting;
    std::size_t rewrite_steps = 0;
    /// Linear-solve output over the candidate set.
    ModuleCombination elimination;
    DimVector candidate_bound{1};
    std::size_t candidate_count = 0;
};

/// Expresses X_M (equivalently the product of its summands' characters) in
/// the basis of rigid characters. Runs the rewriting stage and then the
/// exact linear solve; both must agree and leave a zero residual.
DecompositionReport decompose_report(const TubeModule& m, const DecomposeOptions& options = {});
Decomposition decompose(const TubeModule& m, const DecomposeOptions& options = {});
/// The product X_{M_1} ... X_{M_k}.
Decomposition decompose_product(const std::vector<TubeModule>& factors, const DecomposeOptions& options = {});
/// An arbitrary Laurent polynomial, searched over rigid modules with dim <= bound.
Decomposition decompose_poly(const LaurentPoly& target, const DimVector& bound);

/// Rewriting stage alone; nullopt when the fuel runs out.
std::optional<ModuleCombination> rewrite_to_rigid(const TubeModule& m, std::size_t fuel, std::size_t* steps = nullptr);

/// Unique integer coefficients over the candidates reproducing target, or
/// nullopt when target is not in their span.
std::optional<ModuleCombination> solve_over_candidates(const LaurentPoly& target,
                                                       const std::vector<TubeModule>& candidates);

struct IndependenceResult {
    bool independent = true;
    /// A primitive integer relation sum c_k X_{M_k} = 0 when dependent.
    std::vector<Integer> relation;
};

IndependenceResult independence_check(const std::vector<TubeModule>& modules);

/// X_{E_i[r]} = X_{E_{i+1}[r-2]} + 2, checked by expansion.
struct LinearIdentity {
    TubeModule lhs;
    std::vector<ExpansionTerm> rhs;
    bool verified = false;
};

LinearIdentity lemma_rank_reduction(int rank, int i);

/// sum coeff * X_key.
LaurentPoly evaluate(int rank, const ModuleCombination& combination);

std::string to_string(const Decomposition& d);
/// {"rank": r, "terms": [{"coeff": c, "module": "E(i,n)+..."}]}
std::string to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

}  // namespace tubecc
