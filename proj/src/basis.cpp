#include "tubecc/basis.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "tubecc/character.hpp"
#include "tubecc/cyclic.hpp"
#include "tubecc/error.hpp"
#include "tubecc/expr.hpp"

namespace tubecc {

namespace {

void add_term(ModuleCombination& c, const TubeModule& m, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

TubeModule from_indecs(int rank, std::vector<Indec> parts) { return TubeModule(rank, std::move(parts)); }

DimVector componentwise_max(const DimVector& a, const DimVector& b) {
    std::vector<int> out(a.entries());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], b.entries()[i]);
    return DimVector(a.rank(), std::move(out));
}

bool pair_compatible(int rank, const Indec& a, const Indec& b) {
    return ext1_cluster_dim(TubeModule(rank, {a}), TubeModule(rank, {b})) == 0;
}

}  // namespace

LaurentPoly evaluate(int rank, const ModuleCombination& combination) {
    LaurentPoly out(rank);
    for (const auto& [m, c] : combination) out.add_scaled(c, char_module(m));
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<TubeModule> enumerate_rigid(int rank, const DimVector& bound) {
    if (bound.rank() != rank) fail(ErrorKind::validation, "bound rank does not match");
    std::vector<Indec> shorts;
    for (int len = 1; len < rank; ++len) {
        for (int i = 1; i <= rank; ++i) {
            if (dim_le(dim_vector(rank, Indec{i, len}), bound)) shorts.push_back(Indec{i, len});
        }
    }
    std::sort(shorts.begin(), shorts.end());
    const std::size_t k = shorts.size();
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) ok[a][b] = ok[b][a] = pair_compatible(rank, shorts[a], shorts[b]);
    }

    std::vector<TubeModule> out;
    std::vector<std::size_t> chosen;
    std::vector<int> room(bound.entries());
    auto fits = [&](const Indec& e) {
        for (int s = 0; s < e.length; ++s) {
            if (room[static_cast<std::size_t>(cyclic_slot(e.socle + s, rank))] == 0) return false;
        }
        return true;
    };
    auto take = [&](const Indec& e, int delta) {
        for (int s = 0; s < e.length; ++s) room[static_cast<std::size_t>(cyclic_slot(e.socle + s, rank))] += delta;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        std::vector<Indec> parts;
        for (std::size_t c : chosen) parts.push_back(shorts[c]);
        out.emplace_back(rank, std::move(parts));
        for (std::size_t next = from; next < k; ++next) {
            if (!ok[next][next] || !fits(shorts[next])) continue;
            bool good = true;
            for (std::size_t c : chosen) {
                if (!ok[c][next]) {
                    good = false;
                    break;
                }
            }
            if (!good) continue;
            chosen.push_back(next);
            take(shorts[next], -1);
            self(self, next);
            take(shorts[next], +1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Products of simples

namespace {

struct RayTerm {
    Integer coeff;
    std::vector<Indec> frozen;
    std::optional<Indec> chain;
    bool leading = true;
};

ModuleCombination expand_rays_unchecked(int rank, const std::vector<std::vector<int>>& rays);

// Simple summands of a lower term regrouped as increasing runs a, a+1, ... (no wrap).
std::vector<std::vector<int>> increasing_runs(std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    std::vector<std::vector<int>> runs;
    while (!letters.empty()) {
        std::vector<int> run{letters.front()};
        letters.erase(letters.begin());
        for (;;) {
            auto it = std::find(letters.begin(), letters.end(), run.back() + 1);
            if (it == letters.end()) break;
            run.push_back(*it);
            letters.erase(it);
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

ModuleCombination expand_rays_unchecked(int rank, const std::vector<std::vector<int>>& rays) {
    std::vector<RayTerm> terms{RayTerm{1, {}, std::nullopt, true}};
    for (const std::vector<int>& ray : rays) {
        for (RayTerm& t : terms) {
            if (t.chain) t.frozen.push_back(*t.chain);
            t.chain.reset();
        }
        bool head = true;
        for (int letter : ray) {
            const int j = cyclic_index(letter, rank);
            if (head) {
                for (RayTerm& t : terms) t.chain = Indec{j, 1};
                head = false;
                continue;
            }
            std::vector<RayTerm> next;
            next.reserve(terms.size() * 2);
            for (RayTerm& t : terms) {
                if (t.chain && cyclic_index(t.chain->top_unreduced() + 1, rank) == j) {
                    RayTerm lower = t;
                    lower.leading = false;
                    if (t.chain->length > 1) lower.frozen.push_back(Indec{t.chain->socle, t.chain->length - 1});
                    lower.chain.reset();
                    t.chain->length += 1;
                    next.push_back(std::move(t));
                    next.push_back(std::move(lower));
                } else {
                    t.frozen.push_back(Indec{j, 1});
                    t.leading = false;
                    next.push_back(std::move(t));
                }
            }
            terms = std::move(next);
        }
    }

    ModuleCombination out;
    for (RayTerm& t : terms) {
        if (t.chain) t.frozen.push_back(*t.chain);
        if (t.leading) {
            add_term(out, from_indecs(rank, t.frozen), t.coeff);
            continue;
        }
        std::vector<Indec> rest;
        std::vector<int> simples;
        for (const Indec& e : t.frozen) {
            if (e.length == 1) {
                simples.push_back(cyclic_index(e.socle, rank));
            } else {
                rest.push_back(e);
            }
        }
        const std::vector<std::vector<int>> runs = increasing_runs(simples);
        const bool merges = std::any_of(runs.begin(), runs.end(), [](const auto& r) { return r.size() > 1; });
        if (!merges) {
            add_term(out, from_indecs(rank, t.frozen), t.coeff);
            continue;
        }
        const TubeModule base = from_indecs(rank, rest);
        for (const auto& [m, c] : expand_rays_unchecked(rank, runs)) add_term(out, base.direct_sum(m), t.coeff * c);
    }
    return out;
}

LaurentPoly simple_product(int rank, const std::vector<std::vector<int>>& rays) {
    LaurentPoly p = one(rank);
    for (const auto& ray : rays) {
        for (int letter : ray) p *= char_indec_closed(rank, Indec{cyclic_index(letter, rank), 1});
    }
    return p;
}

}  // namespace

ModuleCombination expand_ray_product(int rank, const std::vector<std::vector<int>>& rays) {
    if (rank < 1) fail(ErrorKind::validation, "rank must be positive");
    ModuleCombination out = expand_rays_unchecked(rank, rays);
    if (!(evaluate(rank, out) == simple_product(rank, rays))) {
        fail(ErrorKind::verification, "product of simples expanded incorrectly");
    }
    return out;
}

ModuleCombination expand_simple_product(int rank, const std::vector<int>& word) {
    if (rank < 1) fail(ErrorKind::validation, "rank must be positive");
    std::vector<std::vector<int>> rays;
    for (int letter : word) {
        const int j = cyclic_index(letter, rank);
        if (!rays.empty() && cyclic_index(rays.back().back() + 1, rank) == j) {
            rays.back().push_back(j);
        } else {
            rays.push_back({j});
        }
    }
    return expand_ray_product(rank, rays);
}

// ---------------------------------------------------------------------------
// Rewriting stage

namespace {

// Orders pending modules so the largest total dimension is rewritten first.
struct RewriteOrder {
    bool operator()(const TubeModule& a, const TubeModule& b) const {
        const int ta = dim_vector(a).total(), tb = dim_vector(b).total();
        if (ta != tb) return ta > tb;
        return a < b;
    }
};

bool rigid_by_pairs(const TubeModule& m) {
    const auto& s = m.summands();
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (s[a].length >= m.rank()) return false;
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (s[a] != s[b] && !pair_compatible(m.rank(), s[a], s[b])) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<ModuleCombination> rewrite_to_rigid(const TubeModule& m, std::size_t fuel, std::size_t* steps) {
    const int r = m.rank();
    std::size_t used = 0;
    if (steps) *steps = 0;
    if (r == 1) {
        Integer value = 1;
        for (const Indec& e : m.summands()) value *= e.length + 1;
        return ModuleCombination{{TubeModule(1), value}};
    }

    std::map<TubeModule, Integer, RewriteOrder> pending;
    ModuleCombination done;
    pending.emplace(m, 1);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const TubeModule cur = node.key();
        const Integer coeff = node.mapped();
        if (coeff == 0) continue;
        if (rigid_by_pairs(cur)) {
            add_term(done, cur, coeff);
            continue;
        }
        if (used++ >= fuel) {
            if (steps) *steps = used - 1;
            return std::nullopt;
        }
        auto push = [&](const TubeModule& key, const Integer& c) {
            auto [it, inserted] = pending.try_emplace(key, c);
            if (!inserted) it->second += c;
        };

        const auto& s = cur.summands();
        std::size_t longest = 0;
        for (std::size_t p = 1; p < s.size(); ++p) {
            if (s[p].length > s[longest].length) longest = p;
        }
        const Indec e = s[longest];
        const TubeModule rest = cur.without(longest);
        if (e.length == r) {
            // X_{E_i[r]} = X_{E_{i+1}[r-2]} + 2
            push(rest.direct_sum(TubeModule::indec_or_zero(r, e.socle + 1, r - 2)), coeff);
            push(rest, coeff * 2);
        } else if (e.length > r) {
            // X_{E_i[n]} = X_{E_{i+n-1}} X_{E_i[n-1]} - X_{E_i[n-2]}
            push(rest.direct_sum(TubeModule(r, {Indec{cyclic_index(e.socle + e.length - 1, r), 1},
                                                Indec{e.socle, e.length - 1}})),
                 coeff);
            push(rest.direct_sum(TubeModule::indec_or_zero(r, e.socle, e.length - 2)), -coeff);
        } else {
            // All summands short: split the first pair (longest first) carrying an extension.
            std::vector<std::size_t> order(s.size());
            for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return s[a].length > s[b].length; });
            bool split = false;
            for (std::size_t a = 0; a < order.size() && !split; ++a) {
                for (std::size_t b = a + 1; b < order.size() && !split; ++b) {
                    const Indec& x = s[order[a]];
                    const Indec& y = s[order[b]];
                    if (x == y || pair_compatible(r, x, y)) continue;
                    const InductiveExpansion ie = multiply_indecomposables(r, x, y);
                    if (is_split_case(ie.which)) return std::nullopt;
                    TubeModule others = cur.without(std::max(order[a], order[b])).without(std::min(order[a], order[b]));
                    for (const ExpansionTerm& t : ie.expansion.terms) push(others.direct_sum(t.module), coeff * t.coeff);
                    split = true;
                }
            }
            if (!split) return std::nullopt;
        }
    }
    if (steps) *steps = used;
    return done;
}

// ---------------------------------------------------------------------------
// Linear solve over candidates

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t out = 1;
    while (e) {
        if (e & 1) out = mul_mod(out, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return out;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t reduce(const Integer& z) {
    mpz_class m = z % mpz_class(std::to_string(kPrime));
    if (m < 0) m += mpz_class(std::to_string(kPrime));
    return std::stoull(m.get_str());
}

Integer symmetric_lift(std::uint64_t v) {
    if (v > kPrime / 2) return Integer(std::to_string(v)) - Integer(std::to_string(kPrime));
    return Integer(std::to_string(v));
}

struct Point {
    std::vector<std::uint64_t> x, inv;
};

std::uint64_t eval_indec(int rank, const Indec& e, const Point& p) {
    auto X = [&](std::int64_t i) { return p.x[static_cast<std::size_t>(cyclic_slot(i, rank))]; };
    auto I = [&](std::int64_t i) { return p.inv[static_cast<std::size_t>(cyclic_slot(i, rank))]; };
    const std::int64_t l = e.socle, n = e.length;
    std::uint64_t v = mul_mod(X(l + n), I(l));
    const std::uint64_t head = mul_mod(X(l + n), X(l - 1));
    for (std::int64_t k = 1; k < n; ++k) v = add_mod(v, mul_mod(head, mul_mod(I(l + k - 1), I(l + k))));
    return add_mod(v, mul_mod(X(l - 1), I(l + n - 1)));
}

std::uint64_t eval_module(const TubeModule& m, const Point& p) {
    std::uint64_t v = 1;
    for (const Indec& e : m.summands()) v = mul_mod(v, eval_indec(m.rank(), e, p));
    return v;
}

std::uint64_t eval_poly(const LaurentPoly& f, const Point& p) {
    std::uint64_t v = 0;
    for (const auto& [exps, c] : f.terms()) {
        std::uint64_t t = reduce(c);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) t = mul_mod(t, pow_mod(p.x[i], static_cast<std::uint64_t>(exps[i])));
            if (exps[i] < 0) t = mul_mod(t, pow_mod(p.inv[i], static_cast<std::uint64_t>(-exps[i])));
        }
        v = add_mod(v, t);
    }
    return v;
}

// Solves by evaluation at random points mod p; nullopt when the system is
// rank deficient there or the lifted solution fails the exact check.
std::optional<ModuleCombination> solve_modular(const LaurentPoly& target, const std::vector<TubeModule>& cands) {
    const int r = target.rank();
    const std::size_t n = cands.size();
    const std::size_t rows = n + 8;
    std::mt19937_64 rng(0x7475626563632ULL);
    std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(n + 1));
    for (std::size_t row = 0; row < rows; ++row) {
        Point p;
        for (int i = 0; i < r; ++i) {
            p.x.push_back(dist(rng));
            p.inv.push_back(inv_mod(p.x.back()));
        }
        for (std::size_t c = 0; c < n; ++c) a[row][c] = eval_module(cands[c], p);
        a[row][n] = eval_poly(target, p);
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = pivot_row;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) return std::nullopt;
        std::swap(a[piv], a[pivot_row]);
        const std::uint64_t inv = inv_mod(a[pivot_row][c]);
        for (std::size_t k = c; k <= n; ++k) a[pivot_row][k] = mul_mod(a[pivot_row][k], inv);
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == pivot_row || a[row][c] == 0) continue;
            const std::uint64_t f = kPrime - a[row][c];
            for (std::size_t k = c; k <= n; ++k) a[row][k] = add_mod(a[row][k], mul_mod(f, a[pivot_row][k]));
        }
        ++pivot_row;
    }
    for (std::size_t row = n; row < rows; ++row) {
        if (a[row][n] != 0) return ModuleCombination{};  // inconsistent: target not in the span
    }
    ModuleCombination out;
    for (std::size_t c = 0; c < n; ++c) add_term(out, cands[c], symmetric_lift(a[c][n]));
    if (!(evaluate(r, out) == target)) return std::nullopt;
    return out;
}

std::optional<ModuleCombination> solve_exact(const LaurentPoly& target, const std::vector<TubeModule>& cands) {
    const int r = target.rank();
    std::map<ExponentVector, std::size_t> index;
    std::vector<LaurentPoly> chars;
    for (const TubeModule& m : cands) chars.push_back(char_module(m));
    for (const LaurentPoly& f : chars) {
        for (const auto& [e, c] : f.terms()) index.emplace(e, 0);
    }
    for (const auto& [e, c] : target.terms()) index.emplace(e, 0);
    std::size_t k = 0;
    for (auto& [e, pos] : index) pos = k++;
    BigMatrix mat(index.size(), cands.size());
    for (std::size_t col = 0; col < chars.size(); ++col) {
        for (const auto& [e, c] : chars[col].terms()) mat(index[e], col) = c;
    }
    std::vector<mpz_class> rhs(index.size(), 0);
    for (const auto& [e, c] : target.terms()) rhs[index[e]] = c;
    const auto sol = solve_rational(mat, rhs);
    if (!sol) return std::nullopt;
    ModuleCombination out;
    for (std::size_t col = 0; col < cands.size(); ++col) {
        const Rational& q = (*sol)[col];
        if (q.get_den() != 1) return std::nullopt;
        add_term(out, cands[col], q.get_num());
    }
    if (!(evaluate(r, out) == target)) return std::nullopt;
    return out;
}

// Generic weight on exponent vectors; ties fall back to lexicographic order.
struct LeadOrder {
    std::vector<std::int64_t> w;

    explicit LeadOrder(int rank) {
        std::mt19937_64 rng(0x6c656164ULL);
        for (int i = 0; i < rank; ++i) w.push_back(static_cast<std::int64_t>(rng() % 100003) - 50001);
    }

    std::int64_t weight(const ExponentVector& e) const {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
        return v;
    }

    bool less(const ExponentVector& a, const ExponentVector& b) const {
        const std::int64_t wa = weight(a), wb = weight(b);
        return wa != wb ? wa < wb : a < b;
    }

    const ExponentVector* lead(const LaurentPoly& f) const {
        const ExponentVector* best = nullptr;
        for (const auto& [e, c] : f.terms()) {
            if (!best || less(*best, e)) best = &e;
        }
        return best;
    }
};

enum class PeelOutcome { solved, no_solution, not_triangular };

// When every candidate has its own leading monomial the system is triangular:
// the leading monomial of the residual pins down the next coefficient.
PeelOutcome solve_triangular(const LaurentPoly& target, const std::vector<TubeModule>& cands, ModuleCombination& out) {
    const int r = target.rank();
    const LeadOrder order(r);
    std::map<ExponentVector, std::size_t> by_lead;
    std::vector<LaurentPoly> chars;
    chars.reserve(cands.size());
    for (std::size_t c = 0; c < cands.size(); ++c) {
        chars.push_back(char_module(cands[c]));
        if (!by_lead.emplace(*order.lead(chars.back()), c).second) return PeelOutcome::not_triangular;
    }
    LaurentPoly residual = target;
    while (!residual.is_zero()) {
        const ExponentVector mu = *order.lead(residual);
        auto it = by_lead.find(mu);
        if (it == by_lead.end()) return PeelOutcome::no_solution;
        const Integer top = chars[it->second].coefficient(mu);
        const Integer have = residual.coefficient(mu);
        if (have % top != 0) return PeelOutcome::no_solution;
        const Integer q = have / top;
        add_term(out, cands[it->second], q);
        residual.add_scaled(-q, chars[it->second]);
    }
    return PeelOutcome::solved;
}

}  // namespace

std::optional<ModuleCombination> solve_over_candidates(const LaurentPoly& target,
                                                       const std::vector<TubeModule>& candidates) {
    if (candidates.empty()) {
        if (target.is_zero()) return ModuleCombination{};
        return std::nullopt;
    }
    ModuleCombination peeled;
    switch (solve_triangular(target, candidates, peeled)) {
        case PeelOutcome::solved: return peeled;
        case PeelOutcome::no_solution: return std::nullopt;
        case PeelOutcome::not_triangular: break;
    }
    if (auto fast = solve_modular(target, candidates)) {
        if (!fast->empty() || target.is_zero()) return fast;
        return std::nullopt;
    }
    return solve_exact(target, candidates);
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

DimVector enlarged(const DimVector& d) {
    std::vector<int> e(d.entries());
    for (int& v : e) v += 1;
    return DimVector(d.rank(), std::move(e));
}

Decomposition finish(int rank, ModuleCombination coeffs, LaurentPoly target) {
    for (const auto& [m, c] : coeffs) {
        if (!is_rigid(m)) fail(ErrorKind::decomposition, "decomposition key " + m.to_string() + " is not rigid");
    }
    if (!(evaluate(rank, coeffs) == target)) fail(ErrorKind::decomposition, "decomposition residual is nonzero");
    return Decomposition{rank, std::move(coeffs), std::move(target)};
}

}  // namespace

DecompositionReport decompose_report(const TubeModule& m, const DecomposeOptions& options) {
    const int r = m.rank();
    DecompositionReport report;
    const LaurentPoly target = char_module(m);
    report.rewriting = rewrite_to_rigid(m, options.fuel, &report.rewrite_steps);

    DimVector bound = dim_vector(m);
    if (report.rewriting) {
        for (const auto& [key, c] : *report.rewriting) bound = componentwise_max(bound, dim_vector(key));
    }
    std::optional<ModuleCombination> solved;
    for (int attempt = 0; attempt < 2 && !solved; ++attempt) {
        if (attempt == 1) bound = enlarged(bound);
        const std::vector<TubeModule> cands = enumerate_rigid(r, bound);
        report.candidate_bound = bound;
        report.candidate_count = cands.size();
        solved = solve_over_candidates(target, cands);
    }
    if (!solved) {
        fail(ErrorKind::decomposition, "no integer combination of rigid characters with dim <= " + bound.to_string() +
                                           " reproduces X of " + m.to_string());
    }
    report.elimination = *solved;
    if (report.rewriting && *report.rewriting != report.elimination) {
        fail(ErrorKind::decomposition, "rewriting and elimination disagree for " + m.to_string());
    }
    report.result = finish(r, report.elimination, target);
    return report;
}

Decomposition decompose(const TubeModule& m, const DecomposeOptions& options) {
    return decompose_report(m, options).result;
}

Decomposition decompose_product(const std::vector<TubeModule>& factors, const DecomposeOptions& options) {
    if (factors.empty()) fail(ErrorKind::validation, "empty product");
    TubeModule sum(factors.front().rank());
    for (const TubeModule& f : factors) sum = sum.direct_sum(f);
    return decompose(sum, options);
}

Decomposition decompose_poly(const LaurentPoly& target, const DimVector& bound) {
    const int r = target.rank();
    const auto solved = solve_over_candidates(target, enumerate_rigid(r, bound));
    if (!solved) {
        fail(ErrorKind::decomposition,
             "target is not an integer combination of rigid characters with dim <= " + bound.to_string());
    }
    return finish(r, *solved, target);
}

// ---------------------------------------------------------------------------
// Independence

IndependenceResult independence_check(const std::vector<TubeModule>& modules) {
    IndependenceResult out;
    if (modules.empty()) return out;
    std::map<ExponentVector, std::size_t> index;
    std::vector<LaurentPoly> chars;
    for (const TubeModule& m : modules) {
        chars.push_back(char_module(m));
        for (const auto& [e, c] : chars.back().terms()) index.emplace(e, 0);
    }
    std::size_t k = 0;
    for (auto& [e, pos] : index) pos = k++;
    BigMatrix mat(index.size(), modules.size());
    for (std::size_t col = 0; col < chars.size(); ++col) {
        for (const auto& [e, c] : chars[col].terms()) mat(index[e], col) = c;
    }
    if (exact_rank(mat) == modules.size()) return out;
    out.independent = false;
    out.relation = nullspace_basis(mat).front();
    // Normalise the sign so the first nonzero entry is positive.
    for (const Integer& c : out.relation) {
        if (c == 0) continue;
        if (c < 0) {
            for (Integer& v : out.relation) v = -v;
        }
        break;
    }
    return out;
}

LinearIdentity lemma_rank_reduction(int rank, int i) {
    if (rank < 2) fail(ErrorKind::validation, "the rank reduction identity needs rank >= 2");
    LinearIdentity id{TubeModule::indec(rank, i, rank),
                      {{1, TubeModule::indec_or_zero(rank, i + 1, rank - 2)}, {2, TubeModule(rank)}},
                      false};
    LaurentPoly rhs(rank);
    for (const ExpansionTerm& t : id.rhs) rhs.add_scaled(t.coeff, char_module(t.module));
    if (!(char_module(id.lhs) == rhs)) {
        fail(ErrorKind::verification, "X of " + id.lhs.to_string() + " differs from the reduced right-hand side");
    }
    id.verified = true;
    return id;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const Decomposition& d) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [m, c] : d.coeffs) {
        if (!first) os << ", ";
        first = false;
        os << m.to_string() << ": " << c.get_str();
    }
    os << '}';
    return os.str();
}

std::string to_json(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["rank"] = d.rank;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : d.coeffs) {
        nlohmann::ordered_json t;
        if (c.fits_slong_p()) {
            t["coeff"] = c.get_si();
        } else {
            t["coeff"] = c.get_str();
        }
        t["module"] = m.to_string();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

Decomposition decomposition_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, "invalid decomposition JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer() || !j.contains("terms") ||
        !j["terms"].is_array()) {
        throw ParseError(0, "decomposition JSON needs integer \"rank\" and array \"terms\"");
    }
    const int r = j["rank"].get<int>();
    Decomposition d{r, {}, LaurentPoly(std::max(r, 1))};
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("module") || !t["module"].is_string()) {
            throw ParseError(0, "decomposition term needs \"coeff\" and \"module\"");
        }
        Integer c;
        if (t["coeff"].is_number_integer()) {
            c = Integer(std::to_string(t["coeff"].get<long long>()));
        } else if (t["coeff"].is_string()) {
            if (c.set_str(t["coeff"].get<std::string>(), 10) != 0) throw ParseError(0, "bad coefficient");
        } else {
            throw ParseError(0, "coefficient must be an integer or decimal string");
        }
        add_term(d.coeffs, parse_module(t["module"].get<std::string>(), r), c);
    }
    d.target = evaluate(r, d.coeffs);
    return d;
}

}  // namespace tubecc
