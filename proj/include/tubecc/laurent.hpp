#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tubecc {

using Integer = mpz_class;

/// Exponents of x_1..x_r; slot i holds the exponent of x_{i+1}.
using ExponentVector = std::vector<std::int32_t>;

struct ExponentHash {
    std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Sparse Laurent polynomial in x_1..x_r with exact integer coefficients.
///
/// Stored coefficients are never zero, so two polynomials are equal iff their
/// term maps are equal. Values are immutable through the public interface
/// apart from the compound-assignment operators.
class LaurentPoly {
public:
    using TermMap = std::unordered_map<ExponentVector, Integer, ExponentHash>;
    using Term = std::pair<ExponentVector, Integer>;

    /// The zero polynomial of the given rank.
    explicit LaurentPoly(int rank);

    static LaurentPoly constant(int rank, const Integer& value);
    static LaurentPoly monomial(int rank, const Integer& coeff, ExponentVector exps);
    /// x_index, with index reduced cyclically into 1..rank.
    static LaurentPoly variable(int rank, std::int64_t index);

    int rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of x^exps (zero when absent).
    Integer coefficient(const ExponentVector& exps) const;

    /// Sum of all coefficients, i.e. the value at x_1 = ... = x_r = 1.
    Integer eval_all_ones() const;

    /// Terms sorted by exponent vector, descending lexicographic on (e_1..e_r).
    std::vector<Term> sorted_terms() const;

    /// Substitutes x_j -> x_{j+delta} for every j.
    LaurentPoly shift_variables(int delta) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Integer& scalar);

    /// Adds coeff * other without materialising the scaled copy.
    LaurentPoly& add_scaled(const Integer& coeff, const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    /// Canonical text form, e.g. "2*x1^-1*x3 + x2 - 1".
    std::string to_string() const;
    /// {"rank": r, "terms": [{"coeff": c, "exp": [e_1, ..., e_r]}]}
    std::string to_json() const;
    static LaurentPoly from_json(std::string_view text);

private:
    void check_rank(const LaurentPoly& other) const;
    void accumulate(const ExponentVector& exps, const Integer& coeff);

    int rank_;
    TermMap terms_;
};

/// The multiplicative identity of the given rank.
inline LaurentPoly one(int rank) { return LaurentPoly::constant(rank, 1); }

}  // namespace tubecc
