#include "tubecc/tube.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "tubecc/cyclic.hpp"
#include "tubecc/error.hpp"

namespace tubecc {

namespace {

void require_rank(int rank) {
    if (rank < 1) fail(ErrorKind::validation, "rank must be positive, got " + std::to_string(rank));
}

void require_same_rank(int a, int b) {
    if (a != b) {
        fail(ErrorKind::validation, "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// DimVector

DimVector::DimVector(int rank) : entries_(static_cast<std::size_t>(std::max(rank, 0)), 0) { require_rank(rank); }

DimVector::DimVector(int rank, std::vector<int> entries) : entries_(std::move(entries)) {
    require_rank(rank);
    if (entries_.size() != static_cast<std::size_t>(rank)) {
        fail(ErrorKind::validation, "dimension vector has length " + std::to_string(entries_.size()) +
                                        ", expected " + std::to_string(rank));
    }
    for (int v : entries_) {
        if (v < 0) fail(ErrorKind::validation, "dimension vector entries must be nonnegative");
    }
}

DimVector DimVector::simple(int rank, std::int64_t vertex) {
    DimVector d(rank);
    d.entries_[static_cast<std::size_t>(cyclic_slot(vertex, rank))] = 1;
    return d;
}

int DimVector::at(std::int64_t vertex) const noexcept {
    return entries_[static_cast<std::size_t>(cyclic_slot(vertex, rank()))];
}

int DimVector::total() const noexcept {
    int t = 0;
    for (int v : entries_) t += v;
    return t;
}

DimVector& DimVector::operator+=(const DimVector& other) {
    require_same_rank(rank(), other.rank());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
    require_same_rank(a.rank(), b.rank());
    std::vector<int> out(a.entries_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries_[i] - b.entries_[i];
    return DimVector(a.rank(), std::move(out));
}

std::string DimVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

DimOrder dim_order_cmp(const DimVector& d, const DimVector& e) {
    require_same_rank(d.rank(), e.rank());
    bool some_less = false;
    bool some_greater = false;
    for (std::size_t i = 0; i < d.entries().size(); ++i) {
        if (d.entries()[i] < e.entries()[i]) some_less = true;
        if (d.entries()[i] > e.entries()[i]) some_greater = true;
    }
    if (some_less && some_greater) return DimOrder::incomparable;
    if (some_less) return DimOrder::less;
    if (some_greater) return DimOrder::greater;
    return DimOrder::equal;
}

bool dim_le(const DimVector& d, const DimVector& e) {
    const DimOrder o = dim_order_cmp(d, e);
    return o == DimOrder::less || o == DimOrder::equal;
}

// ---------------------------------------------------------------------------
// TubeModule

TubeModule::TubeModule(int rank) : rank_(rank) { require_rank(rank); }

TubeModule::TubeModule(int rank, std::vector<Indec> summands) : rank_(rank), summands_(std::move(summands)) {
    require_rank(rank);
    for (Indec& s : summands_) {
        if (s.length <= 0) {
            fail(ErrorKind::validation, "indecomposable length must be positive, got " + std::to_string(s.length));
        }
        s.socle = cyclic_index(s.socle, rank_);
    }
    std::sort(summands_.begin(), summands_.end());
}

TubeModule TubeModule::indec(int rank, std::int64_t socle, int length) {
    return TubeModule(rank, {Indec{cyclic_index(socle, std::max(rank, 1)), length}});
}

TubeModule TubeModule::indec_or_zero(int rank, std::int64_t socle, int length) {
    if (length < 0) {
        fail(ErrorKind::validation, "negative module length " + std::to_string(length));
    }
    return length == 0 ? TubeModule(rank) : indec(rank, socle, length);
}

int TubeModule::max_length() const noexcept {
    int best = 0;
    for (const Indec& s : summands_) best = std::max(best, s.length);
    return best;
}

TubeModule TubeModule::direct_sum(const TubeModule& other) const {
    require_same_rank(rank_, other.rank_);
    std::vector<Indec> all = summands_;
    all.insert(all.end(), other.summands_.begin(), other.summands_.end());
    return TubeModule(rank_, std::move(all));
}

TubeModule TubeModule::without(std::size_t position) const {
    std::vector<Indec> rest = summands_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(position));
    return TubeModule(rank_, std::move(rest));
}

std::string TubeModule::to_string() const {
    if (summands_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < summands_.size(); ++k) {
        if (k) os << '+';
        os << "E(" << summands_[k].socle << ',' << summands_[k].length << ')';
    }
    return os.str();
}

DimVector dim_vector(int rank, const Indec& e) {
    std::vector<int> d(static_cast<std::size_t>(rank), 0);
    for (int s = 0; s < e.length; ++s) ++d[static_cast<std::size_t>(cyclic_slot(e.socle + s, rank))];
    return DimVector(rank, std::move(d));
}

DimVector dim_vector(const TubeModule& m) {
    DimVector d(m.rank());
    for (const Indec& s : m.summands()) d += dim_vector(m.rank(), s);
    return d;
}

namespace {

TubeModule shift(const TubeModule& m, int delta) {
    std::vector<Indec> moved = m.summands();
    for (Indec& s : moved) s.socle += delta;
    return TubeModule(m.rank(), std::move(moved));
}

}  // namespace

TubeModule tau(const TubeModule& m) { return shift(m, -1); }
TubeModule tau_inverse(const TubeModule& m) { return shift(m, 1); }

std::int64_t euler_form(const DimVector& d, const DimVector& e) {
    require_same_rank(d.rank(), e.rank());
    const int r = d.rank();
    std::int64_t sum = 0;
    for (int i = 1; i <= r; ++i) {
        sum += static_cast<std::int64_t>(d.at(i)) * e.at(i);
#ifdef TUBECC_MUTATE_EULER_FORM
        // Deliberately wrong sign; only built into the mutation-test binary.
        sum += static_cast<std::int64_t>(d.at(i)) * e.at(i - 1);
#else
        sum -= static_cast<std::int64_t>(d.at(i)) * e.at(i - 1);
#endif
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Matrix model and Hom spaces

Representation matrix_realization(const TubeModule& m) {
    const int r = m.rank();
    Representation rep;
    rep.rank = r;
    rep.vertex_dims.assign(static_cast<std::size_t>(r), 0);

    // Position of v_s of summand t inside its vertex space.
    std::vector<std::vector<int>> offset(m.summands().size());
    for (std::size_t t = 0; t < m.summands().size(); ++t) {
        const Indec& e = m.summands()[t];
        for (int s = 0; s < e.length; ++s) {
            const int slot = cyclic_slot(e.socle + s, r);
            offset[t].push_back(rep.vertex_dims[static_cast<std::size_t>(slot)]++);
        }
    }

    rep.arrows.resize(static_cast<std::size_t>(r));
    for (int v = 0; v < r; ++v) {
        const int u = rep.arrow_target_slot(v);
        rep.arrows[static_cast<std::size_t>(v)] = SmallMatrix(static_cast<std::size_t>(rep.vertex_dims[u]),
                                                              static_cast<std::size_t>(rep.vertex_dims[v]));
    }
    for (std::size_t t = 0; t < m.summands().size(); ++t) {
        const Indec& e = m.summands()[t];
        for (int s = 1; s < e.length; ++s) {
            const int v = cyclic_slot(e.socle + s, r);
            auto& a = rep.arrows[static_cast<std::size_t>(v)];
            a(static_cast<std::size_t>(offset[t][s - 1]), static_cast<std::size_t>(offset[t][s])) = 1;
        }
    }
    return rep;
}

namespace {

struct HomSystem {
    SmallMatrix equations;
    // Unknown index of entry (row, col) of f_v starts at base[v].
    std::vector<std::size_t> base;
};

// Unknowns: entries of f_v (N_v x M_v). For each arrow a: v -> u the
// equation block is N_a f_v - f_u M_a = 0, of shape N_u x M_v.
HomSystem build_hom_system(const Representation& rm, const Representation& rn) {
    const int r = rm.rank;
    HomSystem sys;
    sys.base.resize(static_cast<std::size_t>(r) + 1, 0);
    for (int v = 0; v < r; ++v) {
        sys.base[v + 1] = sys.base[v] + static_cast<std::size_t>(rn.vertex_dims[v]) * rm.vertex_dims[v];
    }
    std::size_t rows = 0;
    for (int v = 0; v < r; ++v) {
        rows += static_cast<std::size_t>(rn.vertex_dims[rm.arrow_target_slot(v)]) * rm.vertex_dims[v];
    }
    sys.equations = SmallMatrix(rows, sys.base[r]);

    std::size_t row = 0;
    for (int v = 0; v < r; ++v) {
        const int u = rm.arrow_target_slot(v);
        const SmallMatrix& ma = rm.arrows[v];  // M_u x M_v
        const SmallMatrix& na = rn.arrows[v];  // N_u x N_v
        const std::size_t nu = static_cast<std::size_t>(rn.vertex_dims[u]);
        const std::size_t nv = static_cast<std::size_t>(rn.vertex_dims[v]);
        const std::size_t mu = static_cast<std::size_t>(rm.vertex_dims[u]);
        const std::size_t mv = static_cast<std::size_t>(rm.vertex_dims[v]);
        for (std::size_t p = 0; p < nu; ++p) {
            for (std::size_t q = 0; q < mv; ++q, ++row) {
                // (N_a f_v)(p, q) = sum_s N_a(p, s) f_v(s, q)
                for (std::size_t s = 0; s < nv; ++s) {
                    if (na(p, s) != 0) sys.equations(row, sys.base[v] + s * mv + q) += na(p, s);
                }
                // (f_u M_a)(p, q) = sum_s f_u(p, s) M_a(s, q)
                for (std::size_t s = 0; s < mu; ++s) {
                    if (ma(s, q) != 0) sys.equations(row, sys.base[u] + p * mu + s) -= ma(s, q);
                }
            }
        }
    }
    return sys;
}

std::size_t hom_dim_indec(int rank, const Indec& a, const Indec& b) {
    const TubeModule ma(rank, {a});
    const TubeModule mb(rank, {b});
    return hom_dim_direct(ma, mb);
}

struct CacheKey {
    int rank;
    Indec a;
    Indec b;
    friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

class HomCache {
public:
    std::size_t lookup(const CacheKey& key) {
        if (!enabled.load(std::memory_order_relaxed)) return hom_dim_indec(key.rank, key.a, key.b);
        {
            std::shared_lock lock(mutex_);
            auto it = values_.find(key);
            if (it != values_.end()) return it->second;
        }
        const std::size_t value = hom_dim_indec(key.rank, key.a, key.b);
        std::unique_lock lock(mutex_);
        values_.emplace(key, value);
        return value;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        values_.clear();
    }

    std::atomic<bool> enabled{true};

private:
    std::shared_mutex mutex_;
    std::map<CacheKey, std::size_t> values_;
};

HomCache& hom_cache() {
    static HomCache cache;
    return cache;
}

}  // namespace

HomSpace hom_space(const TubeModule& m, const TubeModule& n) {
    require_same_rank(m.rank(), n.rank());
    const Representation rm = matrix_realization(m);
    const Representation rn = matrix_realization(n);
    const HomSystem sys = build_hom_system(rm, rn);

    BigMatrix equations(sys.equations.rows(), sys.equations.cols());
    for (std::size_t i = 0; i < equations.rows(); ++i)
        for (std::size_t j = 0; j < equations.cols(); ++j) equations(i, j) = static_cast<long>(sys.equations(i, j));

    HomSpace out;
    for (const auto& vec : nullspace_basis(equations)) {
        std::vector<SmallMatrix> maps;
        for (int v = 0; v < m.rank(); ++v) {
            const std::size_t rows = static_cast<std::size_t>(rn.vertex_dims[v]);
            const std::size_t cols = static_cast<std::size_t>(rm.vertex_dims[v]);
            SmallMatrix f(rows, cols);
            for (std::size_t p = 0; p < rows; ++p)
                for (std::size_t q = 0; q < cols; ++q) {
                    const mpz_class& x = vec[sys.base[v] + p * cols + q];
                    if (!x.fits_slong_p()) fail(ErrorKind::validation, "Hom basis entry exceeds 64 bits");
                    f(p, q) = x.get_si();
                }
            maps.push_back(std::move(f));
        }
        out.basis.push_back(std::move(maps));
    }
    out.dim = out.basis.size();
    return out;
}

std::size_t hom_dim_direct(const TubeModule& m, const TubeModule& n) {
    require_same_rank(m.rank(), n.rank());
    if (m.is_zero() || n.is_zero()) return 0;
    const HomSystem sys = build_hom_system(matrix_realization(m), matrix_realization(n));
    return sys.equations.cols() - exact_rank(sys.equations);
}

std::size_t hom_dim(const TubeModule& m, const TubeModule& n) {
    require_same_rank(m.rank(), n.rank());
    std::size_t total = 0;
    for (const Indec& a : m.summands())
        for (const Indec& b : n.summands()) total += hom_cache().lookup(CacheKey{m.rank(), a, b});
    return total;
}

std::size_t ext1_dim(const TubeModule& m, const TubeModule& n) {
    const std::int64_t hom = static_cast<std::int64_t>(hom_dim(m, n));
    const std::int64_t ext = hom - euler_form(dim_vector(m), dim_vector(n));
    if (ext < 0) {
        fail(ErrorKind::verification, "negative Ext dimension for (" + m.to_string() + ", " + n.to_string() +
                                          "): Euler form disagrees with Hom");
    }
    return static_cast<std::size_t>(ext);
}

std::size_t ext1_cluster_dim(const TubeModule& m, const TubeModule& n) { return ext1_dim(m, n) + ext1_dim(n, m); }

bool is_rigid(const TubeModule& m) { return ext1_dim(m, m) == 0; }

void set_hom_cache_enabled(bool enabled) { hom_cache().enabled.store(enabled); }
void clear_hom_cache() { hom_cache().clear(); }

}  // namespace tubecc
