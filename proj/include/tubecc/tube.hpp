#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tubecc/linalg.hpp"

namespace tubecc {

/// The indecomposable E_i[n]: socle E_i, length n >= 1.
struct Indec {
    int socle = 1;
    int length = 1;

    /// Top composition factor index (socle + length - 1, not reduced).
    int top_unreduced() const noexcept { return socle + length - 1; }

    friend auto operator<=>(const Indec&, const Indec&) = default;
};

/// Dimension vector of a module: entry i counts the simple E_{i+1}.
class DimVector {
public:
    explicit DimVector(int rank);
    DimVector(int rank, std::vector<int> entries);

    static DimVector simple(int rank, std::int64_t vertex);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const noexcept { return entries_; }
    /// Entry at a 1-based vertex index, reduced cyclically.
    int at(std::int64_t vertex) const noexcept;
    int total() const noexcept;
    bool is_zero() const noexcept { return total() == 0; }

    DimVector& operator+=(const DimVector& other);
    friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
    /// Componentwise difference; throws if any entry would go negative.
    friend DimVector operator-(const DimVector& a, const DimVector& b);
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

enum class DimOrder { less, equal, greater, incomparable };

/// Componentwise partial order on dimension vectors.
DimOrder dim_order_cmp(const DimVector& d, const DimVector& e);
/// d is componentwise <= e.
bool dim_le(const DimVector& d, const DimVector& e);

/// A nilpotent representation of the cyclic quiver, as a multiset of
/// indecomposables in canonical (sorted) order. The empty multiset is 0.
class TubeModule {
public:
    explicit TubeModule(int rank);
    TubeModule(int rank, std::vector<Indec> summands);

    static TubeModule indec(int rank, std::int64_t socle, int length);
    /// E_socle[length], or the zero module when length == 0.
    static TubeModule indec_or_zero(int rank, std::int64_t socle, int length);

    int rank() const noexcept { return rank_; }
    const std::vector<Indec>& summands() const noexcept { return summands_; }
    bool is_zero() const noexcept { return summands_.empty(); }
    bool is_indecomposable() const noexcept { return summands_.size() == 1; }
    int max_length() const noexcept;

    TubeModule direct_sum(const TubeModule& other) const;
    /// Removes one copy of the summand at the given position.
    TubeModule without(std::size_t position) const;

    /// Module expression, e.g. "E(1,2)+E(3,1)" or "0".
    std::string to_string() const;

    friend auto operator<=>(const TubeModule&, const TubeModule&) = default;

private:
    int rank_;
    std::vector<Indec> summands_;
};

DimVector dim_vector(int rank, const Indec& e);
DimVector dim_vector(const TubeModule& m);

/// Auslander-Reiten translate: E_i[n] -> E_{i-1}[n] summandwise.
TubeModule tau(const TubeModule& m);
TubeModule tau_inverse(const TubeModule& m);

/// <d, e> = sum_i d_i e_i - sum_i d_i e_{i-1}; equals dim Hom - dim Ext^1.
std::int64_t euler_form(const DimVector& d, const DimVector& e);

/// Concrete model: basis vector v_s of each summand E_i[n] sits at vertex
/// i+s, and the arrow leaving that vertex maps v_s to v_{s-1} (v_0 to 0).
struct Representation {
    int rank = 1;
    std::vector<int> vertex_dims;
    /// arrows[v] is the matrix of the arrow from vertex v+1 to vertex v
    /// (1-based, cyclic), shape vertex_dims[v-1] x vertex_dims[v].
    std::vector<SmallMatrix> arrows;

    int arrow_target_slot(int source_slot) const noexcept { return (source_slot + rank - 1) % rank; }
};

Representation matrix_realization(const TubeModule& m);

struct HomSpace {
    std::size_t dim = 0;
    /// Each element is a family of vertex maps f_v : M_v -> N_v, indexed by
    /// zero-based vertex slot, shape N_v x M_v.
    std::vector<std::vector<SmallMatrix>> basis;
};

/// Hom(M, N) from the linear system f_u M_a = N_a f_v over all arrows a: v -> u.
HomSpace hom_space(const TubeModule& m, const TubeModule& n);
/// dim Hom(M, N), summed over pairs of indecomposable summands (memoised).
std::size_t hom_dim(const TubeModule& m, const TubeModule& n);
/// dim Hom(M, N) from one linear solve on the full modules, no caching.
std::size_t hom_dim_direct(const TubeModule& m, const TubeModule& n);

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>.
std::size_t ext1_dim(const TubeModule& m, const TubeModule& n);
/// dim Ext^1(M, N) + dim Ext^1(N, M).
std::size_t ext1_cluster_dim(const TubeModule& m, const TubeModule& n);
bool is_rigid(const TubeModule& m);

/// Turns the Hom/Ext memo cache on or off; results are identical either way.
void set_hom_cache_enabled(bool enabled);
void clear_hom_cache();

}  // namespace tubecc
