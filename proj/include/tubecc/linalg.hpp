#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace tubecc {

using Rational = mpq_class;

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using SmallMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<mpz_class>;

SmallMatrix multiply(const SmallMatrix& a, const SmallMatrix& b);

/// Exact rank by fraction-free (Bareiss) elimination. Runs in 64-bit
/// arithmetic and restarts in arbitrary precision if any step overflows.
std::size_t exact_rank(const SmallMatrix& m);
std::size_t exact_rank(const BigMatrix& m);

/// Basis of the right null space {v : m v = 0}, each vector scaled to a
/// primitive integer vector. Columns are ordered so the basis is in
/// reduced echelon shape with respect to the free variables.
std::vector<std::vector<mpz_class>> nullspace_basis(const BigMatrix& m);

/// Some solution of m v = rhs over the rationals, or nullopt if inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_rational(const BigMatrix& m, const std::vector<mpz_class>& rhs);

}  // namespace tubecc
