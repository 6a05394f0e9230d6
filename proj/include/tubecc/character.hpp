#pragma once

#include <vector>

#include "tubecc/laurent.hpp"
#include "tubecc/tube.hpp"

namespace tubecc {

/// X_M from its definition: the sum over submodule dimension vectors e of
/// chi(Gr_e(M)) * prod_i x_i^(-<e, s_i> - <s_i, dim M - e>). X_0 = 1.
LaurentPoly char_definitional(const TubeModule& m);

/// Closed form for an indecomposable:
///   x_{l+n}/x_l + sum_{k=1}^{n-1} x_{l+n} x_{l-1} / (x_{l+k-1} x_{l+k}) + x_{l-1}/x_{l+n-1}
LaurentPoly char_indec_closed(int rank, const Indec& e);

/// Product of the closed forms over the summands (memoised by module).
LaurentPoly char_module(const TubeModule& m);

/// E(A, i) = E_i^{a_1} + E_{i+1}^{a_2} + ... + E_{i+r-2}^{a_{r-1}} for one row a of A.
TubeModule char_e_family(int rank, const std::vector<int>& row, int i);

/// prod_{s=1}^{r-1} ((x_{j+1} + x_{j-1}) / x_j)^{a_s} with j = i + s - 1.
LaurentPoly char_e_family_product(int rank, const std::vector<int>& row, int i);

void set_char_cache_enabled(bool enabled);
void clear_char_cache();

}  // namespace tubecc
