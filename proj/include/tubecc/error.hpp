#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tubecc {

enum class ErrorKind {
    validation,     // bad argument: rank mismatch, out-of-range index, ...
    parse,          // malformed module expression or JSON
    precondition,   // theorem hypothesis not met (e.g. Ext/Hom dimension != 1)
    verification,   // a claimed identity failed exact expansion
    decomposition,  // basis expansion left a nonzero residual
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::parse, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tubecc
