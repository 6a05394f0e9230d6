#pragma once

#include <map>
#include <vector>

#include "tubecc/laurent.hpp"
#include "tubecc/tube.hpp"

namespace tubecc {

/// Nonzero values e -> chi(Gr_e(M)) of a module's submodule Grassmannians.
using GrSupport = std::map<DimVector, Integer>;

/// dim E_i[k] for k = 0..n: the submodules of a uniserial form a chain.
std::vector<DimVector> submodule_dim_chain(int rank, const Indec& e);

/// Convolution over the summands of the chain indicators.
GrSupport gr_support(const TubeModule& m);

Integer gr_euler_char(const TubeModule& m, const DimVector& e);

}  // namespace tubecc
