#include "tubecc/grassmannian.hpp"

#include "tubecc/error.hpp"

namespace tubecc {

std::vector<DimVector> submodule_dim_chain(int rank, const Indec& e) {
    std::vector<DimVector> chain;
    chain.reserve(static_cast<std::size_t>(e.length) + 1);
    chain.emplace_back(rank);
    for (int k = 1; k <= e.length; ++k) {
        chain.push_back(chain.back() + DimVector::simple(rank, e.socle + k - 1));
    }
    return chain;
}

GrSupport gr_support(const TubeModule& m) {
    GrSupport acc;
    acc.emplace(DimVector(m.rank()), 1);
    for (const Indec& s : m.summands()) {
        const std::vector<DimVector> chain = submodule_dim_chain(m.rank(), s);
        GrSupport next;
        for (const auto& [e, chi] : acc) {
            for (const DimVector& f : chain) next[e + f] += chi;
        }
        acc = std::move(next);
    }
    return acc;
}

Integer gr_euler_char(const TubeModule& m, const DimVector& e) {
    if (e.rank() != m.rank()) fail(ErrorKind::validation, "rank mismatch in gr_euler_char");
    const GrSupport support = gr_support(m);
    auto it = support.find(e);
    return it == support.end() ? Integer(0) : it->second;
}

}  // namespace tubecc
