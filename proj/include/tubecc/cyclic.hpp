#pragma once

#include <cstdint>

namespace tubecc {

/// Reduces a vertex index into the representative range 1..rank.
///
/// Both variable subscripts (x_i = x_{i+r}) and simple-module subscripts
/// (E_i = E_{i+r}) go through this function and nowhere else.
constexpr int cyclic_index(std::int64_t index, int rank) noexcept {
    const std::int64_t m = ((index - 1) % rank + rank) % rank;
    return static_cast<int>(m) + 1;
}

/// Zero-based slot of a 1-based cyclic index.
constexpr int cyclic_slot(std::int64_t index, int rank) noexcept { return cyclic_index(index, rank) - 1; }

}  // namespace tubecc
