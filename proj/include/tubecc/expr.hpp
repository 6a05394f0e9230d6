#pragma once

#include <string_view>

#include "tubecc/tube.hpp"

namespace tubecc {

/// Parses `0` | `E(i,n)` | expr `+` expr (whitespace ignored). `+` is the
/// direct sum, i is reduced into 1..rank, n must be at least 1.
/// Throws ParseError with the offending byte offset.
TubeModule parse_module(std::string_view text, int rank);

}  // namespace tubecc
