#include "tubecc/character.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "tubecc/cyclic.hpp"
#include "tubecc/error.hpp"
#include "tubecc/grassmannian.hpp"

namespace tubecc {

namespace {

// x^a / x^b (indices cyclic), as an exponent vector.
ExponentVector ratio(int rank, std::initializer_list<std::int64_t> up, std::initializer_list<std::int64_t> down) {
    ExponentVector e(static_cast<std::size_t>(rank), 0);
    for (std::int64_t i : up) ++e[static_cast<std::size_t>(cyclic_slot(i, rank))];
    for (std::int64_t i : down) --e[static_cast<std::size_t>(cyclic_slot(i, rank))];
    return e;
}

class CharCache {
public:
    LaurentPoly get(const TubeModule& key, LaurentPoly (*compute)(const TubeModule&)) {
        if (!enabled.load(std::memory_order_relaxed)) return compute(key);
        {
            std::shared_lock lock(mutex_);
            auto it = values_.find(key);
            if (it != values_.end()) return it->second;
        }
        LaurentPoly value = compute(key);
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
    std::map<TubeModule, LaurentPoly> values_;
};

CharCache& char_cache() {
    static CharCache cache;
    return cache;
}

LaurentPoly char_module_uncached(const TubeModule& m) {
    LaurentPoly out = one(m.rank());
    for (const Indec& s : m.summands()) out *= char_indec_closed(m.rank(), s);
    return out;
}

}  // namespace

LaurentPoly char_definitional(const TubeModule& m) {
    const int r = m.rank();
    const DimVector d = dim_vector(m);
    LaurentPoly out(r);
    for (const auto& [e, chi] : gr_support(m)) {
        const DimVector quotient = d - e;
        ExponentVector w(static_cast<std::size_t>(r), 0);
        for (int i = 1; i <= r; ++i) {
            const DimVector s = DimVector::simple(r, i);
            const std::int64_t x = -euler_form(e, s) - euler_form(s, quotient);
            w[static_cast<std::size_t>(i - 1)] = static_cast<std::int32_t>(x);
        }
        out += LaurentPoly::monomial(r, chi, std::move(w));
    }
    return out;
}

LaurentPoly char_indec_closed(int rank, const Indec& e) {
    const std::int64_t l = e.socle;
    const std::int64_t n = e.length;
    if (n < 1) fail(ErrorKind::validation, "indecomposable length must be positive");
    LaurentPoly out(rank);
    out += LaurentPoly::monomial(rank, 1, ratio(rank, {l + n}, {l}));
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        out += LaurentPoly::monomial(rank, 1, ratio(rank, {l + n, l + rank - 1}, {l + k - 1, l + k}));
    }
    out += LaurentPoly::monomial(rank, 1, ratio(rank, {l + rank - 1}, {l + n - 1}));
    return out;
}

LaurentPoly char_module(const TubeModule& m) {
    if (m.is_zero()) return one(m.rank());
    return char_cache().get(m, &char_module_uncached);
}

TubeModule char_e_family(int rank, const std::vector<int>& row, int i) {
    if (rank < 2) fail(ErrorKind::validation, "the E(A, i) family needs rank >= 2");
    if (row.size() != static_cast<std::size_t>(rank - 1)) {
        fail(ErrorKind::validation, "E(A, i) row must have rank - 1 entries");
    }
    std::vector<Indec> summands;
    for (int s = 1; s <= rank - 1; ++s) {
        const int a = row[static_cast<std::size_t>(s - 1)];
        if (a < 0) fail(ErrorKind::validation, "E(A, i) multiplicities must be nonnegative");
        for (int t = 0; t < a; ++t) summands.push_back(Indec{i + s - 1, 1});
    }
    return TubeModule(rank, std::move(summands));
}

LaurentPoly char_e_family_product(int rank, const std::vector<int>& row, int i) {
    // Validates the same way as the module constructor.
    (void)char_e_family(rank, row, i);
    LaurentPoly out = one(rank);
    for (int s = 1; s <= rank - 1; ++s) {
        const std::int64_t j = i + s - 1;
        LaurentPoly factor(rank);
        factor += LaurentPoly::monomial(rank, 1, ratio(rank, {j + 1}, {j}));
        factor += LaurentPoly::monomial(rank, 1, ratio(rank, {j - 1}, {j}));
        for (int t = 0; t < row[static_cast<std::size_t>(s - 1)]; ++t) out *= factor;
    }
    return out;
}

void set_char_cache_enabled(bool enabled) { char_cache().enabled.store(enabled); }
void clear_char_cache() { char_cache().clear(); }

}  // namespace tubecc
