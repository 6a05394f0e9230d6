#include "tubecc/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tubecc/cyclic.hpp"
#include "tubecc/error.hpp"

namespace tubecc {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int32_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("Laurent exponent overflow");
    }
    return out;
}

void require_rank(int rank) {
    if (rank < 1) {
        fail(ErrorKind::validation, "rank must be positive, got " + std::to_string(rank));
    }
}

}  // namespace

std::size_t ExponentHash::operator()(const ExponentVector& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int32_t v : e) {
        h ^= static_cast<std::uint32_t>(v);
        h *= 0x100000001b3ULL;
    }
    return h;
}

LaurentPoly::LaurentPoly(int rank) : rank_(rank) { require_rank(rank); }

LaurentPoly LaurentPoly::constant(int rank, const Integer& value) {
    return monomial(rank, value, ExponentVector(static_cast<std::size_t>(rank), 0));
}

LaurentPoly LaurentPoly::monomial(int rank, const Integer& coeff, ExponentVector exps) {
    LaurentPoly p(rank);
    if (exps.size() != static_cast<std::size_t>(rank)) {
        fail(ErrorKind::validation, "exponent vector has length " + std::to_string(exps.size()) +
                                        ", expected rank " + std::to_string(rank));
    }
    if (coeff != 0) {
        p.terms_.emplace(std::move(exps), coeff);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(int rank, std::int64_t index) {
    require_rank(rank);
    ExponentVector e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(cyclic_slot(index, rank))] = 1;
    return monomial(rank, 1, std::move(e));
}

Integer LaurentPoly::coefficient(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::eval_all_ones() const {
    Integer sum = 0;
    for (const auto& [_, c] : terms_) {
        sum += c;
    }
    return sum;
}

std::vector<LaurentPoly::Term> LaurentPoly::sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    return out;
}

LaurentPoly LaurentPoly::shift_variables(int delta) const {
    LaurentPoly out(rank_);
    for (const auto& [exps, c] : terms_) {
        ExponentVector moved(exps.size(), 0);
        for (int j = 1; j <= rank_; ++j) {
            moved[static_cast<std::size_t>(cyclic_slot(j + delta, rank_))] =
                exps[static_cast<std::size_t>(j - 1)];
        }
        out.terms_.emplace(std::move(moved), c);
    }
    return out;
}

void LaurentPoly::check_rank(const LaurentPoly& other) const {
    if (other.rank_ != rank_) {
        fail(ErrorKind::validation, "rank mismatch: " + std::to_string(rank_) + " vs " +
                                        std::to_string(other.rank_));
    }
}

void LaurentPoly::accumulate(const ExponentVector& exps, const Integer& coeff) {
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    check_rank(other);
    for (const auto& [exps, c] : other.terms_) {
        accumulate(exps, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    check_rank(other);
    for (const auto& [exps, c] : other.terms_) {
        accumulate(exps, -c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::add_scaled(const Integer& coeff, const LaurentPoly& other) {
    check_rank(other);
    if (coeff == 0) {
        return *this;
    }
    Integer scaled;
    for (const auto& [exps, c] : other.terms_) {
        scaled = c * coeff;
        accumulate(exps, scaled);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_rank(b);
    LaurentPoly out(a.rank_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    ExponentVector sum(static_cast<std::size_t>(a.rank_));
    Integer prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t s = 0; s < sum.size(); ++s) {
                sum[s] = checked_add(ea[s], eb[s]);
            }
            prod = ca * cb;
            out.accumulate(sum, prod);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(*this);
    for (auto& [_, c] : out.terms_) {
        c = -c;
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : sorted_terms()) {
        const bool negative = c < 0;
        const Integer magnitude = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        for (std::size_t s = 0; s < exps.size(); ++s) {
            if (exps[s] == 0) continue;
            std::string f = "x" + std::to_string(s + 1);
            if (exps[s] != 1) f += "^" + std::to_string(exps[s]);
            factors.push_back(std::move(f));
        }
        if (factors.empty() || magnitude != 1) {
            factors.insert(factors.begin(), magnitude.get_str());
        }
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f > 0) os << '*';
            os << factors[f];
        }
    }
    return os.str();
}

namespace {

// Coefficients that fit in 64 bits are emitted as JSON numbers; larger ones as
// decimal strings so no reader silently rounds them through a double.
nlohmann::json coefficient_to_json(const Integer& c) {
    if (c.fits_slong_p()) {
        return static_cast<std::int64_t>(c.get_si());
    }
    return c.get_str();
}

Integer coefficient_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer out;
        if (out.set_str(j.get<std::string>(), 10) != 0) {
            throw ParseError(0, "invalid coefficient string");
        }
        return out;
    }
    throw ParseError(0, "coefficient must be an integer");
}

}  // namespace

std::string LaurentPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, c] : sorted_terms()) {
        terms.push_back({{"coeff", coefficient_to_json(c)}, {"exp", exps}});
    }
    nlohmann::json doc = {{"rank", rank_}, {"terms", std::move(terms)}};
    return doc.dump();
}

LaurentPoly LaurentPoly::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, "malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("rank") || !doc.contains("terms") ||
        !doc["rank"].is_number_integer() || !doc["terms"].is_array()) {
        throw ParseError(0, "expected {\"rank\": r, \"terms\": [...]}");
    }
    const int rank = doc["rank"].get<int>();
    LaurentPoly out(rank);
    for (const auto& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exp") ||
            !term["exp"].is_array()) {
            throw ParseError(0, "term must be {\"coeff\": c, \"exp\": [...]}");
        }
        ExponentVector exps = term["exp"].get<ExponentVector>();
        out += monomial(rank, coefficient_from_json(term["coeff"]), std::move(exps));
    }
    return out;
}

}  // namespace tubecc
