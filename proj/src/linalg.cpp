#include "tubecc/linalg.hpp"

#include <stdexcept>
#include <type_traits>
#include <utility>

namespace tubecc {

namespace {

struct Overflow {};

struct Checked {
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
};

template <class T>
bool divides_exactly(const T& num, const T& den) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        return num % den == 0;
    } else {
        return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
    }
}

// Fraction-free forward elimination; every entry stays a minor of the input.
template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    T prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < cols; ++c) std::swap(m(pivot, c), m(row, c));
        }
        const T p = m(row, col);
        for (std::size_t r = row + 1; r < rows; ++r) {
            const T lead = m(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                T num;
                if constexpr (std::is_same_v<T, std::int64_t>) {
                    num = Checked::sub(Checked::mul(p, m(r, c)), Checked::mul(lead, m(row, c)));
                } else {
                    num = p * m(r, c) - lead * m(row, c);
                }
                if (!divides_exactly(num, prev)) {
                    throw std::logic_error("fraction-free elimination produced an inexact quotient");
                }
                if constexpr (std::is_same_v<T, std::int64_t>) {
                    m(r, c) = num / prev;
                } else {
                    mpz_divexact(m(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
            }
            m(r, col) = 0;
        }
        prev = p;
        ++row;
    }
    return row;
}

// Reduced row echelon form over Q. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix<Rational>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix<Rational> to_rational(const BigMatrix& m, std::size_t extra_cols = 0) {
    Matrix<Rational> out(m.rows(), m.cols() + extra_cols);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

}  // namespace

SmallMatrix multiply(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    SmallMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::size_t exact_rank(const SmallMatrix& m) {
    try {
        return bareiss_rank(m);
    } catch (const Overflow&) {
        BigMatrix big(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) big(r, c) = static_cast<long>(m(r, c));
        return bareiss_rank(std::move(big));
    }
}

std::size_t exact_rank(const BigMatrix& m) { return bareiss_rank(m); }

std::vector<std::vector<mpz_class>> nullspace_basis(const BigMatrix& m) {
    Matrix<Rational> q = to_rational(m);
    const std::vector<std::size_t> pivots = rref(q);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -q(r, free);

        mpz_class denom_lcm = 1;
        for (const Rational& x : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> iv(v.size());
        mpz_class g = 0;
        for (std::size_t c = 0; c < v.size(); ++c) {
            iv[c] = v[c].get_num() * (denom_lcm / v[c].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[c].get_mpz_t());
        }
        if (g > 1)
            for (auto& x : iv) x /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_rational(const BigMatrix& m, const std::vector<mpz_class>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix<Rational> q = to_rational(m, 1);
    for (std::size_t r = 0; r < m.rows(); ++r) q(r, m.cols()) = rhs[r];
    const std::vector<std::size_t> pivots = rref(q);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

    std::vector<Rational> x(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = q(r, m.cols());
    return x;
}

}  // namespace tubecc
